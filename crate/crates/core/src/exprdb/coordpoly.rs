//! Variable substitution on coordinate polynomials.

use crate::exactnum::Rat;
use crate::roots::CoordinatePolynomial;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Image of a variable under a substitution: zero, or a signed variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedImage {
    Zero,
    Var(i8, String),
}

/// Formal substitution `x -> image(x)` with recollection of terms. The map
/// must cover every variable of the input; the output lives on
/// `target_vars`.
pub fn substitute(
    poly: &CoordinatePolynomial,
    map: &BTreeMap<String, SignedImage>,
    target_vars: Vec<String>,
) -> Result<CoordinatePolynomial> {
    let target_index: BTreeMap<&str, usize> = target_vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    // resolve each source variable once
    let mut resolved: Vec<Option<(usize, i8)>> = Vec::with_capacity(poly.nvars());
    for v in &poly.vars {
        match map.get(v) {
            None => {
                return Err(Error::InvalidArgument(format!(
                    "substitution map misses variable `{v}`"
                )))
            }
            Some(SignedImage::Zero) => resolved.push(None),
            Some(SignedImage::Var(sign, name)) => {
                let idx = *target_index.get(name.as_str()).ok_or_else(|| {
                    Error::InvalidArgument(format!("image variable `{name}` not in target set"))
                })?;
                resolved.push(Some((idx, *sign)));
            }
        }
    }
    let mut out = CoordinatePolynomial::zero(target_vars);
    'term: for (exps, coeff) in poly.terms() {
        let mut new_exps = vec![0u8; out.nvars()];
        let mut sign = 1i8;
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match resolved[i] {
                None => continue 'term, // variable goes to zero
                Some((j, s)) => {
                    new_exps[j] += e;
                    if s < 0 && e % 2 == 1 {
                        sign = -sign;
                    }
                }
            }
        }
        let c = if sign < 0 { -coeff.clone() } else { coeff.clone() };
        out.add_term(new_exps, c);
    }
    Ok(out)
}

/// Identity substitution on a polynomial's own variables.
pub fn identity_map(poly: &CoordinatePolynomial) -> BTreeMap<String, SignedImage> {
    poly.vars
        .iter()
        .map(|v| (v.clone(), SignedImage::Var(1, v.clone())))
        .collect()
}

/// Evaluate a coordinate polynomial at named values.
pub fn evaluate_named(
    poly: &CoordinatePolynomial,
    values: &BTreeMap<String, Rat>,
) -> Result<Rat> {
    let mut point = Vec::with_capacity(poly.nvars());
    for v in &poly.vars {
        point.push(
            values
                .get(v)
                .ok_or_else(|| Error::MissingGenerator(v.clone()))?
                .clone(),
        );
    }
    Ok(poly.evaluate(&point))
}

/// True when the polynomial evaluates to zero at the given point.
pub fn vanishes_at(poly: &CoordinatePolynomial, point: &[Rat]) -> bool {
    poly.evaluate(point).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i64;

    #[test]
    fn identity_substitution_is_identity() {
        let mut p = CoordinatePolynomial::zero(vec!["a".into(), "b".into()]);
        p.add_term(vec![2, 1], rat_i64(3));
        let out = substitute(&p, &identity_map(&p), p.vars.clone()).unwrap();
        assert_eq!(out, p);
    }

    #[test]
    fn signed_and_zero_images() {
        let mut p = CoordinatePolynomial::zero(vec!["a".into(), "b".into(), "c".into()]);
        p.add_term(vec![1, 1, 0], rat_i64(1));
        p.add_term(vec![0, 0, 2], rat_i64(5));
        let mut map = BTreeMap::new();
        map.insert("a".to_string(), SignedImage::Var(-1, "x".into()));
        map.insert("b".to_string(), SignedImage::Var(1, "x".into()));
        map.insert("c".to_string(), SignedImage::Zero);
        let out = substitute(&p, &map, vec!["x".into()]).unwrap();
        assert_eq!(out.coefficient(&[2]), rat_i64(-1));
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn incomplete_map_rejected() {
        let mut p = CoordinatePolynomial::zero(vec!["a".into(), "b".into()]);
        p.add_term(vec![1, 0], rat_i64(1));
        let mut map = BTreeMap::new();
        map.insert("a".to_string(), SignedImage::Zero);
        assert!(substitute(&p, &map, vec![]).is_err());
    }
}
