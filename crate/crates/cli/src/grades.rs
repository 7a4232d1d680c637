//! Exact rational cells: parsing `p/q` and decimals, printing `i/m` and decimals.

use galois_factor_core::grade::{Grade, GradeChain};

/// Longest accepted fractional part; keeps `10^k` inside `u64`.
const MAX_DECIMALS: usize = 18;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Option<u64> {
    (a / gcd(a, b)).checked_mul(b)
}

/// A value in `[0, 1]` as a reduced fraction `(p, q)`.
///
/// Accepts `p/q`, decimals (`0.25`, `.5`, `1.0`) and the integers `0` and `1`.
pub fn parse_ratio(text: &str) -> Option<(u64, u64)> {
    let text = text.trim();
    let (p, q) = if let Some((p, q)) = text.split_once('/') {
        (parse_digits(p.trim())?, parse_digits(q.trim())?)
    } else {
        let (int, frac) = text.split_once('.').unwrap_or((text, ""));
        if (int.is_empty() && frac.is_empty()) || frac.len() > MAX_DECIMALS {
            return None;
        }
        let int = if int.is_empty() {
            0
        } else {
            parse_digits(int)?
        };
        let frac_val = if frac.is_empty() {
            0
        } else {
            parse_digits(frac)?
        };
        let q = 10u64.pow(frac.len() as u32);
        (int.checked_mul(q)?.checked_add(frac_val)?, q)
    };
    if q == 0 || p > q {
        return None;
    }
    let d = gcd(p, q);
    Some((p / d, q / d))
}

fn parse_digits(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `i/m`, unreduced, so the chain stays visible.
pub fn fraction(g: Grade) -> String {
    format!("{}/{}", g.numerator(), g.chain().m())
}

/// Shortest exact decimal for `num/m`, or `num/m` when it has none within six places.
pub fn decimal(num: u32, m: u32) -> String {
    let (p, q) = {
        let d = gcd(u64::from(num), u64::from(m));
        (u64::from(num) / d, u64::from(m) / d)
    };
    if q == 1 {
        return p.to_string();
    }
    let mut scale = 1u64;
    for places in 1..=6 {
        scale *= 10;
        if scale.is_multiple_of(q) {
            let digits = p * (scale / q);
            return format!("0.{digits:0places$}");
        }
    }
    format!("{num}/{m}")
}

pub fn decimal_grade(g: Grade) -> String {
    decimal(g.numerator(), g.chain().m())
}

/// The grade `text` denotes on `chain`; `Err` carries the two nearest grid points.
pub fn on_chain(chain: GradeChain, text: &str) -> Result<Grade, OffChain> {
    let (p, q) = parse_ratio(text).ok_or(OffChain::NotANumber)?;
    chain.from_ratio(p, q).ok_or_else(|| {
        let (lo, hi) = chain.bracket(p, q).expect("ratio in [0, 1]");
        OffChain::Between(lo, hi)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OffChain {
    NotANumber,
    Between(Grade, Grade),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios() {
        assert_eq!(parse_ratio("0.25"), Some((1, 4)));
        assert_eq!(parse_ratio(".5"), Some((1, 2)));
        assert_eq!(parse_ratio("1"), Some((1, 1)));
        assert_eq!(parse_ratio("1.0"), Some((1, 1)));
        assert_eq!(parse_ratio("0"), Some((0, 1)));
        assert_eq!(parse_ratio(" 2/8 "), Some((1, 4)));
        for bad in ["", ".", "-0.5", "1.5", "3/2", "1/0", "x", "0.5.1", "1e-3"] {
            assert_eq!(parse_ratio(bad), None, "{bad}");
        }
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(2, 4), "0.5");
        assert_eq!(decimal(3, 4), "0.75");
        assert_eq!(decimal(4, 4), "1");
        assert_eq!(decimal(0, 4), "0");
        assert_eq!(decimal(1, 8), "0.125");
        assert_eq!(decimal(1, 3), "1/3");
        assert_eq!(decimal(1, 20), "0.05");
    }

    #[test]
    fn off_chain_values_name_their_neighbours() {
        let chain = GradeChain::new(4).unwrap();
        let Err(OffChain::Between(lo, hi)) = on_chain(chain, "0.3") else {
            panic!("0.3 is not a quarter");
        };
        assert_eq!(
            (decimal_grade(lo), decimal_grade(hi)),
            ("0.25".into(), "0.5".into())
        );
        assert_eq!(on_chain(chain, "0.75").unwrap().numerator(), 3);
        assert_eq!(on_chain(chain, "3/4").unwrap().numerator(), 3);
    }
}
