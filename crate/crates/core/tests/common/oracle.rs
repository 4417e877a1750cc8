//! Brute-force Contemporary renderer driven by the four-digit líng table,
//! written without reference to the library's generator.

const DIGITS: [&str; 10] = ["", "一", "二", "三", "四", "五", "六", "七", "八", "九"];
const INNER: [&str; 4] = ["", "十", "百", "千"];

/// Rows of the líng table, as zero/non-zero patterns of a window with its
/// leading zeros removed, and where the líng goes (index of the digit it
/// precedes).
const LING_ROWS: [(&str, usize); 5] = [
    ("x0xx", 2),
    ("x0x0", 2),
    ("xx0x", 3),
    ("x00x", 3),
    ("x0x", 2),
];

fn pattern(s: &str) -> String {
    s.chars().map(|c| if c == '0' { '0' } else { 'x' }).collect()
}

/// A window of up to four digits, leading zeros already stripped.
fn window(s: &str, first_in_numeral: bool) -> String {
    let pat = pattern(s);
    let ling_before = LING_ROWS.iter().find(|(p, _)| *p == pat).map(|&(_, at)| at);
    let len = s.len();
    let mut out = String::new();
    for (i, c) in s.chars().enumerate() {
        let d = c.to_digit(10).unwrap() as usize;
        if Some(i) == ling_before {
            out.push('零');
        }
        if d == 0 {
            continue;
        }
        let rank = len - 1 - i;
        let omit_one = first_in_numeral && i == 0 && d == 1 && rank == 1;
        if !omit_one {
            out.push_str(DIGITS[d]);
        }
        out.push_str(INNER[rank]);
    }
    out
}

/// Traditional Han form of `n` in the Contemporary grammar.
pub fn contemporary_han(n: u64) -> String {
    if n == 0 {
        return "零".to_owned();
    }
    let digits = format!("{n:012}");
    let windows = [(&digits[0..4], "億"), (&digits[4..8], "萬"), (&digits[8..12], "")];
    let mut out = String::new();
    let mut seen = false;
    let mut skipped = false;
    for (w, outer) in windows {
        let stripped = w.trim_start_matches('0');
        if stripped.is_empty() {
            skipped |= seen;
            continue;
        }
        if seen && (w.starts_with('0') || skipped) {
            out.push('零');
        }
        out.push_str(&window(stripped, !seen));
        out.push_str(outer);
        seen = true;
        skipped = false;
    }
    out
}

/// Rank gaps of `n`: consecutive non-zero digits at positions p > q need a
/// líng when, inside one myriad group, some position between them is
/// skipped, or, across groups, the group below the outer pivot does not
/// start at its thousands digit.
pub fn rank_gaps(n: u64) -> usize {
    let digits = n.to_string();
    let len = digits.len();
    // descending positions of non-zero digits
    let positions: Vec<usize> = digits
        .chars()
        .enumerate()
        .filter(|(_, c)| *c != '0')
        .map(|(i, _)| len - 1 - i)
        .collect();
    positions
        .windows(2)
        .filter(|w| {
            let (p, q) = (w[0], w[1]);
            if p / 4 == q / 4 {
                p - q > 1
            } else {
                q + 1 < 4 * (p / 4)
            }
        })
        .count()
}

/// Number of zero digits, which the líng count must not follow.
pub fn zero_digits(n: u64) -> usize {
    n.to_string().chars().filter(|&c| c == '0').count()
}

#[test]
fn oracle_sanity() {
    assert_eq!(contemporary_han(1_305_000_080), "十三億零五百萬零八十");
    assert_eq!(contemporary_han(105), "一百零五");
    assert_eq!(contemporary_han(1001), "一千零一");
    assert_eq!(contemporary_han(1010), "一千零一十");
    assert_eq!(contemporary_han(110), "一百一十");
    assert_eq!(contemporary_han(15), "十五");
    assert_eq!(contemporary_han(100_000_023), "一億零二十三");
    assert_eq!(contemporary_han(1_001_000), "一百萬一千");
    assert_eq!(rank_gaps(1001), 1);
    assert_eq!(rank_gaps(1_305_000_080), 2);
    assert_eq!(rank_gaps(100_000_023), 1);
    assert_eq!(rank_gaps(1_001_000), 0);
}
