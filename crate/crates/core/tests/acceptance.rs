//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use chinum::{
    classify, parse, render_elliptic, render_integer, render_quantity, run_selftest, scan, summarize, DiagnosticKind,
    EraId, EraMode, Morpheme, Rank, RenderError, RenderOptions, Script, TwoStyle, EXAMPLES,
};
use common::oracle;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const EXHAUSTIVE_MAX: u64 = 1_000_000;
const ROUND_TRIP_SAMPLES: usize = 100_000;
const LING_SAMPLES: usize = 100_000;
const COHERENCE_SAMPLES: usize = 10_000;
const ZHEJIANG_SAMPLES: usize = 1_000;
const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const ROUND_TRIP_BUDGET: Duration = Duration::from_secs(60);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn first_failure(failures: &[String], checked: impl std::fmt::Display) -> Outcome {
    match failures.first() {
        None => pass(format!("{checked} checked, 0 failures")),
        Some(f) => fail(format!("{} failures of {checked}; first: {f}", failures.len())),
    }
}

fn examples() -> Outcome {
    let start = Instant::now();
    let report = run_selftest(0, EXAMPLES);
    let elapsed = start.elapsed();
    if !report.passed() {
        return fail(format!("{:?}", report.failures));
    }
    if elapsed > EXAMPLE_BUDGET {
        return fail(format!("took {elapsed:?}"));
    }
    pass(format!("{} examples, {elapsed:?}", report.examples_checked))
}

fn round_trip() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(2);
    let mut failures = Vec::new();
    let mut checked = 0u64;
    let opts = RenderOptions::default();
    for era in EraId::ALL {
        let profile = era.profile();
        let sampled = (0..ROUND_TRIP_SAMPLES).map(|_| rng.gen_range(profile.min_value()..=profile.max_value));
        let exhaustive = profile.min_value()..=EXHAUSTIVE_MAX.min(profile.max_value);
        for n in exhaustive.chain(sampled.collect::<Vec<_>>()) {
            checked += 1;
            let tokens = render_integer(n, &profile, &opts).unwrap().tokens;
            match parse(&tokens, EraMode::Strict(era)) {
                Ok(o) if o.value == n => {}
                other => failures.push(format!("{} {n}: {other:?}", era.key())),
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ROUND_TRIP_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    first_failure(&failures, format!("{checked} values in {elapsed:.1?}"))
}

fn oracle_equivalence() -> Outcome {
    let era = EraId::Contemporary.profile();
    let opts = RenderOptions::default();
    let failures: Vec<String> = (0..=EXHAUSTIVE_MAX)
        .filter_map(|n| {
            let got = render_integer(n, &era, &opts).unwrap().surface(Script::Traditional);
            let want = oracle::contemporary_han(n);
            (got != want).then(|| format!("{n}: {got} != {want}"))
        })
        .collect();
    first_failure(&failures, EXHAUSTIVE_MAX + 1)
}

fn ling_count() -> Outcome {
    let era = EraId::Contemporary.profile();
    let opts = RenderOptions::default();
    let mut rng = StdRng::seed_from_u64(4);
    let mut failures = Vec::new();
    for (n, want) in [(1001, 1), (1_305_000_080, 2)] {
        let got = render_integer(n, &era, &opts).unwrap().ling_count();
        if got != want {
            failures.push(format!("{n}: {got} líng"));
        }
    }
    let mut differs_from_zero_digits = 0;
    for _ in 0..LING_SAMPLES {
        let n = rng.gen_range(1..=era.max_value);
        let got = render_integer(n, &era, &opts).unwrap().ling_count();
        let gaps = oracle::rank_gaps(n);
        if got != gaps {
            failures.push(format!("{n}: {got} líng, {gaps} gaps"));
        }
        differs_from_zero_digits += usize::from(gaps != oracle::zero_digits(n));
    }
    if differs_from_zero_digits == 0 {
        failures.push("gap count never differed from the zero-digit count".to_owned());
    }
    first_failure(&failures, LING_SAMPLES + 2)
}

fn elliptic_discipline() -> Outcome {
    let era = EraId::Contemporary.profile();
    let opts = RenderOptions::default();
    let mut failures = Vec::new();
    let (mut defined, mut unavailable_105) = (0, 0);
    for n in 1..=EXHAUSTIVE_MAX {
        let full = render_integer(n, &era, &opts).unwrap().tokens;
        let k = full.len();
        // [d][P][d'][P/10] with P of rank 10² or 10³
        let shape = k >= 4
            && matches!(
                (full[k - 3], full[k - 1]),
                (Morpheme::Pivot(p), Morpheme::Pivot(q)) if !p.is_outer() && p >= Rank::Hundred && q.exponent() + 1 == p.exponent()
            )
            && full[k - 2].digit_value().is_some();
        match render_elliptic(n, &era, &opts) {
            Ok(e) => {
                defined += 1;
                if !shape || e.tokens[..] != full[..k - 1] {
                    failures.push(format!("{n}: elliptic {:?} vs full {:?}", e.tokens, full));
                }
                match parse(&e.tokens, EraMode::Strict(EraId::Contemporary)) {
                    Ok(o) if o.value == n && o.features.elliptic => {}
                    other => failures.push(format!("{n}: elliptic parse {other:?}")),
                }
            }
            Err(RenderError::EllipsisUnavailable(_)) => {
                if shape {
                    failures.push(format!("{n}: elliptic form missing"));
                }
                let ends_with_ling_digit = k >= 2 && full[k - 2] == Morpheme::Ling && full[k - 1].digit_value().is_some();
                unavailable_105 += usize::from(ends_with_ling_digit);
            }
            Err(e) => failures.push(format!("{n}: {e}")),
        }
        let q = render_quantity(n, "個", &era).unwrap();
        if q.numerals().any(|x| x.flags.elliptic || (n != 2 && x.tokens != full)) {
            failures.push(format!("{n}: quantity phrase uses a non-full form"));
        }
    }
    if render_elliptic(105, &era, &opts) != Err(RenderError::EllipsisUnavailable(105)) {
        failures.push("105 has an elliptic form".to_owned());
    }
    first_failure(&failures, format!("{EXHAUSTIVE_MAX} values, {defined} elliptic, {unavailable_105} líng-final refused"))
}

fn er_liang() -> Outcome {
    let era = EraId::Contemporary.profile();
    let er = RenderOptions::default();
    let liang = RenderOptions::default().two_style(TwoStyle::PreferLiang);
    let mut failures = Vec::new();
    let mut with_liang = 0;
    for n in 1..=EXHAUSTIVE_MAX {
        let t = render_integer(n, &era, &liang).unwrap().tokens;
        if t.windows(2).any(|w| w == [Morpheme::LiangTwo, Morpheme::Pivot(Rank::Ten)]) {
            failures.push(format!("{n}: liǎng before [10]"));
        }
        if t.len() > 1 && t.last() == Some(&Morpheme::LiangTwo) {
            failures.push(format!("{n}: liǎng in the unit slot"));
        }
        with_liang += usize::from(t.contains(&Morpheme::LiangTwo));
        let e = render_integer(n, &era, &er).unwrap().tokens;
        let values = (parse(&t, EraMode::default()).map(|o| o.value), parse(&e, EraMode::default()).map(|o| o.value));
        if values != (Ok(n), Ok(n)) {
            failures.push(format!("{n}: {values:?}"));
        }
    }
    first_failure(&failures, format!("{EXHAUSTIVE_MAX} values, {with_liang} with liǎng"))
}

fn coherence() -> Outcome {
    use EraId::*;
    let mut rng = StdRng::seed_from_u64(7);
    let mut failures = Vec::new();
    for _ in 0..COHERENCE_SAMPLES {
        let era = EraId::ALL[rng.gen_range(0..EraId::ALL.len())];
        let profile = era.profile();
        let n = rng.gen_range(profile.min_value()..=profile.max_value);
        let mut opts = RenderOptions::default();
        if profile.you_allowed() {
            opts = opts.use_you(rng.gen());
        }
        let tokens = render_integer(n, &profile, &opts).unwrap().tokens;
        if !classify(&tokens).accepts(era) {
            failures.push(format!("{} {n}", era.key()));
        }
    }

    let early = vec![ShangOracle, ZhouBronze, WarringStates];
    let p = Morpheme::Pivot;
    let d = Morpheme::digit;
    let rows: Vec<(Vec<Morpheme>, Vec<EraId>)> = vec![
        (vec![p(Rank::Ten), Morpheme::You, d(5)], early.clone()),
        (vec![p(Rank::Hundred), Morpheme::You, d(5)], early.clone()),
        (vec![d(1), p(Rank::Hundred), Morpheme::You, d(5)], early.clone()),
        (vec![p(Rank::Hundred), Morpheme::You, d(5), p(Rank::Ten)], early.clone()),
        (vec![p(Rank::Hundred), d(5)], vec![ShangOracle, ZhouBronze, WarringStates, SuanShuShu]),
        (vec![p(Rank::Hundred), d(5), p(Rank::Ten)], vec![ShangOracle, ZhouBronze, WarringStates, SuanShuShu]),
        (
            vec![d(1), p(Rank::Hundred), d(5)],
            vec![ShangOracle, ZhouBronze, WarringStates, Dunhuang, NineChapters, Contemporary],
        ),
        (
            vec![d(1), p(Rank::Hundred), d(5), p(Rank::Ten)],
            vec![ShangOracle, ZhouBronze, WarringStates, Dunhuang, NineChapters, SongQin, Contemporary],
        ),
        (vec![d(1), p(Rank::Hundred), Morpheme::Ling, d(5)], vec![SongQin, Contemporary]),
        (vec![p(Rank::Thousand), d(8), p(Rank::Ten), d(9)], vec![ShangOracle, ZhouBronze, WarringStates, SuanShuShu]),
        (vec![Morpheme::LiangTwo, p(Rank::Thousand), d(5), p(Rank::Hundred)], vec![Contemporary]),
    ];
    for (tokens, want) in &rows {
        let got = classify(tokens).consistent;
        if &got != want {
            failures.push(format!("{tokens:?}: {got:?}"));
        }
    }
    first_failure(&failures, format!("{COHERENCE_SAMPLES} pairs and {} signature rows", rows.len()))
}

fn zhejiang() -> Outcome {
    let era = EraId::Contemporary.profile();
    let opts = RenderOptions::default();
    let mut rng = StdRng::seed_from_u64(8);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < ZHEJIANG_SAMPLES {
        let n = rng.gen_range(10_000..=era.max_value);
        let full = render_integer(n, &era, &opts).unwrap().tokens;
        let dropped: Vec<Morpheme> = full
            .iter()
            .enumerate()
            .filter(|&(i, m)| !(*m == Morpheme::Ling && i > 0 && matches!(full[i - 1], Morpheme::Pivot(r) if r.is_outer())))
            .map(|(_, m)| *m)
            .collect();
        if dropped.len() == full.len() {
            continue;
        }
        done += 1;
        if parse(&dropped, EraMode::Strict(EraId::Contemporary)).is_ok() {
            failures.push(format!("{n}: strict accepted"));
        }
        match parse(&dropped, EraMode::Lenient) {
            Ok(o) if o.value == n && o.diagnostics.iter().any(|d| d.kind == DiagnosticKind::ZhejiangLingDrop) => {}
            other => failures.push(format!("{n}: lenient {other:?}")),
        }
    }
    first_failure(&failures, ZHEJIANG_SAMPLES)
}

fn scan_tallies() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let contemporary = EraId::Contemporary.profile();
    let zhou = EraId::ZhouBronze.profile();
    let mut corpus = String::new();
    let mut planted = [0usize; 5];
    let filler = ["記錄如下：", "共計", "據說是", "，其後", "。\n"];
    for i in 0..2_000 {
        let kind = rng.gen_range(0..5);
        let numeral = loop {
            let n = rng.gen_range(1..=99_999_999u64);
            let text = match kind {
                // yòu
                0 => render_integer(n % 1000, &zhou, &RenderOptions::default().use_you(true))
                    .ok()
                    .filter(|e| e.tokens.contains(&Morpheme::You)),
                // líng
                1 => render_integer(n, &contemporary, &RenderOptions::default()).ok().filter(|e| e.ling_count() > 0),
                // liǎng, no líng
                2 => render_integer(n, &contemporary, &RenderOptions::default().two_style(TwoStyle::PreferLiang))
                    .ok()
                    .filter(|e| e.tokens.contains(&Morpheme::LiangTwo) && e.ling_count() == 0),
                // elliptic
                3 => render_elliptic(n, &contemporary, &RenderOptions::default()).ok().filter(|e| e.ling_count() == 0),
                // none of the above
                _ => render_integer(n, &contemporary, &RenderOptions::default()).ok().filter(|e| e.ling_count() == 0),
            };
            if let Some(e) = text {
                break e.surface(Script::Traditional);
            }
        };
        planted[kind] += 1;
        corpus.push_str(filler[i % filler.len()]);
        corpus.push_str(&numeral);
    }
    corpus.push_str("完。");

    let records = scan(&corpus, EraMode::Lenient);
    let s = summarize(&records);
    let total = planted.iter().sum::<usize>();
    let got = (s.total, s.errors, s.with_you, s.without_you, s.with_ling, s.with_liang, s.elliptic);
    let want = (total, 0, planted[0], total - planted[0], planted[1], planted[2], planted[3]);
    if got == want {
        pass(format!("{total} planted numerals, tallies {got:?}"))
    } else {
        fail(format!("tallies {got:?}, planted {want:?}"))
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked examples reproduce exactly", examples),
        ("round trip for every era", round_trip),
        ("Contemporary renderer matches the table oracle", oracle_equivalence),
        ("líng count equals rank gaps", ling_count),
        ("elliptic discipline", elliptic_discipline),
        ("èr/liǎng constraints", er_liang),
        ("classifier coherence and signature rows", coherence),
        ("líng dropped after outer pivots", zhejiang),
        ("scan tallies equal planted counts", scan_tallies),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.ok);
        println!("criterion {}: {status} {name} [{:.2?}] {}", i + 1, start.elapsed(), outcome.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
