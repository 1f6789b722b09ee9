//! A small text syntax for polynomial maps, e.g.
//! `"z1/2, z2/4 + z1^2/16"` or `"(1/2+i)*z1*z2 - 3/4*z2"`.
//!
//! Components are separated by commas; a term is a product of factors
//! joined by `*`, where a factor is a rational, a parenthesized scalar, or
//! a variable `zK` with optional `^e`. A variable factor may carry a
//! trailing `/d`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::monomial::MultiIndex;
use crate::polymap::PolyMap;
use crate::scalar::{parse_rational, Scalar};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn split_top_level(s: &str, seps: &[char]) -> Vec<(char, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = '+';
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && seps.contains(&c) && !cur.trim().is_empty() {
            out.push((sign, std::mem::take(&mut cur)));
            sign = c;
            continue;
        }
        if depth == 0 && seps.contains(&c) {
            // leading sign of the first term
            sign = if c == '-' { if sign == '-' { '+' } else { '-' } } else { sign };
            continue;
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push((sign, cur));
    }
    out
}

fn parse_digits(s: &str, what: &str) -> Result<u32> {
    s.parse::<u32>().map_err(|_| perr(format!("bad {what} `{s}`")))
}

fn parse_term(n: usize, term: &str) -> Result<(MultiIndex, Scalar)> {
    let mut coeff = Scalar::one();
    let mut exps = vec![0u32; n];
    for factor in term.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(perr(format!("empty factor in `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix('z') {
            let (var, den) = match rest.split_once('/') {
                Some((v, d)) => (v, Some(d)),
                None => (rest, None),
            };
            let (idx, e) = match var.split_once('^') {
                Some((i, e)) => (parse_digits(i, "variable index")?, parse_digits(e, "exponent")?),
                None => (parse_digits(var, "variable index")?, 1),
            };
            if idx == 0 || idx as usize > n {
                return Err(perr(format!("variable z{idx} outside 1..={n}")));
            }
            exps[idx as usize - 1] += e;
            if let Some(d) = den {
                let d = parse_rational(d)?;
                if d == BigRational::from_integer(BigInt::from(0)) {
                    return Err(Error::DivisionByZero);
                }
                coeff = &coeff / &Scalar::real(d);
            }
        } else if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
            coeff = &coeff * &Scalar::from_str(inner)?;
        } else {
            coeff = &coeff * &Scalar::real(parse_rational(factor)?);
        }
    }
    Ok((MultiIndex::new(exps), coeff))
}

/// Parses one component in `n` variables.
pub fn parse_jet(n: usize, truncation: u32, text: &str) -> Result<Jet> {
    let mut terms = Vec::new();
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    for (sign, term) in split_top_level(&compact, &['+', '-']) {
        let (alpha, c) = parse_term(n, &term)?;
        terms.push((alpha, if sign == '-' { -c } else { c }));
    }
    Jet::from_terms(n, truncation, terms)
}

/// The number of components fixes the dimension; the truncation degree is
/// the largest degree present (at least 1).
impl FromStr for PolyMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        let n = parts.len();
        let jets = parts
            .iter()
            .map(|p| parse_jet(n, u32::MAX, p))
            .collect::<Result<Vec<_>>>()?;
        let deg = jets
            .iter()
            .flat_map(|j| j.terms().map(|(a, _)| a.degree()))
            .max()
            .unwrap_or(1)
            .max(1);
        PolyMap::new(jets.into_iter().map(|j| j.truncate(deg)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_map() {
        let phi: PolyMap = "z1/2, z2/4 + z1^2/16".parse().unwrap();
        assert_eq!(phi.dim(), 2);
        assert_eq!(phi.truncation(), 2);
        assert_eq!(phi.component(1).coeff(&MultiIndex::new(vec![2, 0])), Scalar::ratio(1, 16));
        assert_eq!(phi.component(0).coeff(&MultiIndex::new(vec![1, 0])), Scalar::ratio(1, 2));
    }

    #[test]
    fn signs_and_complex_coefficients() {
        let phi: PolyMap = "-z1/3 + (1/2+i)*z1*z2, 3/4*z2 - z2^3".parse().unwrap();
        assert_eq!(phi.component(0).coeff(&MultiIndex::new(vec![1, 0])), Scalar::ratio(-1, 3));
        assert_eq!(
            phi.component(0).coeff(&MultiIndex::new(vec![1, 1])),
            Scalar::complex(1, 2, 1, 1)
        );
        assert_eq!(phi.component(1).coeff(&MultiIndex::new(vec![0, 3])), Scalar::from_int(-1));
        assert_eq!(phi.truncation(), 3);
        let spaced: PolyMap = "( 1/2 - 1/3i ) * z1".parse().unwrap();
        assert_eq!(spaced.component(0).coeff(&MultiIndex::new(vec![1])), Scalar::complex(1, 2, -1, 3));
    }

    #[test]
    fn rejects_garbage() {
        assert!("z3, z1".parse::<PolyMap>().is_err());
        assert!("z1 + 1, z2".parse::<PolyMap>().is_err());
        assert!("z1/0".parse::<PolyMap>().is_err());
        assert!("q1".parse::<PolyMap>().is_err());
    }
}
