//! The named polynomials the pipeline ships: the Gr(3,9) discriminant in
//! fundamental invariants, the 2x2x2x2 hyperdeterminant in fundamental
//! invariants, the explicit coordinate quartics (2x2x2 hyperdeterminant,
//! Gr(3,6) dual, binary-cubic discriminant), and the relations expressing
//! the redundant Gr(4,8) invariants on 2x2x2x2 tensors.

use super::coordpoly::SignedImage;
use super::expr::InvariantExpression;
use crate::exactnum::parse_rat;
use crate::roots::CoordinatePolynomial;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A named builtin: either an invariant expression or a coordinate polynomial.
#[derive(Clone, Debug)]
pub enum BuiltinPolynomial {
    Expression(InvariantExpression),
    Coordinate(CoordinatePolynomial),
}

impl BuiltinPolynomial {
    pub fn as_expression(&self) -> Result<&InvariantExpression> {
        match self {
            BuiltinPolynomial::Expression(e) => Ok(e),
            _ => Err(Error::InvalidArgument(
                "expected an invariant expression".into(),
            )),
        }
    }

    pub fn as_coordinate(&self) -> Result<&CoordinatePolynomial> {
        match self {
            BuiltinPolynomial::Coordinate(c) => Ok(c),
            _ => Err(Error::InvalidArgument(
                "expected a coordinate polynomial".into(),
            )),
        }
    }
}

/// Builtin names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 8] = [
    "gr39_discriminant",
    "hd2222",
    "delta222",
    "gr36_dual",
    "binary_cubic_disc",
    "f10_relation",
    "f14_relation",
    "f18_relation",
];

/// Look up a builtin polynomial by name.
pub fn builtin(name: &str) -> Result<BuiltinPolynomial> {
    match name {
        "gr39_discriminant" => Ok(BuiltinPolynomial::Expression(gr39_discriminant())),
        "hd2222" => Ok(BuiltinPolynomial::Expression(hd2222())),
        "delta222" => Ok(BuiltinPolynomial::Coordinate(delta222())),
        "gr36_dual" => Ok(BuiltinPolynomial::Coordinate(gr36_dual())),
        "binary_cubic_disc" => Ok(BuiltinPolynomial::Coordinate(binary_cubic_disc())),
        "f10_relation" => Ok(BuiltinPolynomial::Expression(f10_relation())),
        "f14_relation" => Ok(BuiltinPolynomial::Expression(f14_relation())),
        "f18_relation" => Ok(BuiltinPolynomial::Expression(f18_relation())),
        _ => Err(Error::UnknownName(name.into())),
    }
}

fn gens(spec: &[(&str, u32)]) -> Vec<(String, u32)> {
    spec.iter().map(|(n, w)| (n.to_string(), *w)).collect()
}

fn expression_from_table(
    generators: Vec<(String, u32)>,
    degree: u32,
    table: &[(&[u8], &str)],
) -> InvariantExpression {
    let mut e = InvariantExpression::new(generators, degree);
    for (exps, coeff) in table {
        e.add_term(exps.to_vec(), parse_rat(coeff).expect("builtin literal"))
            .expect("builtin homogeneity");
    }
    e
}

pub const GR39_DISCRIMINANT_TERMS: [([u8; 4], &str); 28] = [
    ([10, 0, 0, 0], "1"),
    ([8, 0, 1, 0], "-188875/1526823"),
    ([7, 2, 0, 0], "-44940218765172270463/2232199994248855116"),
    ([6, 1, 0, 1], "522717082571600510/5022449987059924011"),
    ([6, 0, 2, 0], "156259946875/27974261679948"),
    ([5, 2, 1, 0], "20955843759677134000/15067349961179772033"),
    ([4, 4, 0, 0], "113325967730636958495085217/1009180965699898771226274"),
    ([5, 0, 0, 2], "-8007699664851700/45202049883539316099"),
    ([4, 1, 1, 1], "-951594557840795000/135606149650617948297"),
    ([4, 0, 3, 0], "-37339826093750/327991224631970313"),
    ([3, 3, 0, 1], "-4631798176278228432974860/4541314345649544470518233"),
    ([3, 2, 2, 0], "-43381098724294271875/2440910693711123069346"),
    ([2, 4, 1, 0], "-48098757899275092625/15067349961179772033"),
    ([1, 6, 0, 0], "-11518845901768651039/329340982758027804"),
    ([3, 0, 1, 2], "1392403335812500/135606149650617948297"),
    ([2, 2, 0, 2], "6686357462527147925300/1513771448549848156839411"),
    ([2, 1, 2, 1], "140973248590625000/1220455346855561534673"),
    ([2, 0, 4, 0], "351718750000/327991224631970313"),
    ([1, 3, 1, 1], "2133816827644645000/135606149650617948297"),
    ([1, 2, 3, 0], "-198339133437500/741017211205562559"),
    ([0, 5, 0, 1], "45691574382263590/741017211205562559"),
    ([0, 4, 2, 0], "-32778366465625/48591292538069676"),
    ([1, 1, 0, 3], "-14445540571041712000/1513771448549848156839411"),
    ([1, 0, 2, 2], "-216716472500000/1220455346855561534673"),
    ([0, 2, 1, 2], "-2371961791512500/135606149650617948297"),
    ([0, 1, 3, 1], "10890275000000/20007464702550189093"),
    ([0, 0, 5, 0], "-1250000000/327991224631970313"),
    ([0, 0, 0, 4], "34328756109890000/4541314345649544470518233"),
];

/// The Gr(3,9) discriminant: 28 monomials in f12, f18, f24, f30 of weighted
/// degree 120, leading coefficient 1 on f12^10.
pub fn gr39_discriminant() -> InvariantExpression {
    let table: Vec<(&[u8], &str)> = GR39_DISCRIMINANT_TERMS
        .iter()
        .map(|(e, c)| (&e[..], *c))
        .collect();
    expression_from_table(
        gens(&[("f12", 12), ("f18", 18), ("f24", 24), ("f30", 30)]),
        120,
        &table,
    )
}

pub const HD2222_TERMS: [([u8; 4], &str); 16] = [
    ([0, 0, 0, 2], "-1/151875"),
    ([0, 0, 3, 0], "4/421875"),
    ([0, 2, 0, 1], "496/455625"),
    ([0, 4, 0, 0], "-61504/1366875"),
    ([1, 1, 2, 0], "-88/140625"),
    ([2, 0, 1, 1], "922/2278125"),
    ([2, 2, 1, 0], "-672832/34171875"),
    ([3, 1, 0, 1], "-5128/759375"),
    ([3, 3, 0, 0], "5208736/11390625"),
    ([4, 0, 2, 0], "-178501/34171875"),
    ([5, 1, 1, 0], "1865048/11390625"),
    ([6, 0, 0, 1], "3026/455625"),
    ([6, 2, 0, 0], "-61462384/34171875"),
    ([8, 0, 1, 0], "-1156846/6834375"),
    ([9, 1, 0, 0], "6012304/2278125"),
    ([12, 0, 0, 0], "-1733509/1366875"),
];

/// The 2x2x2x2 hyperdeterminant: 16 monomials in f2, f6, f8, f12 of weighted
/// degree 24, with coefficient -1/151875 on f12^2.
pub fn hd2222() -> InvariantExpression {
    let table: Vec<(&[u8], &str)> = HD2222_TERMS.iter().map(|(e, c)| (&e[..], *c)).collect();
    expression_from_table(
        gens(&[("f2", 2), ("f6", 6), ("f8", 8), ("f12", 12)]),
        24,
        &table,
    )
}

/// The two printed anchor coefficients of the Gr(4,8) discriminant
/// (the f2^63 and f18^7 monomials); the full 15,942-term expression is a
/// data file produced by the interpolation pipeline, and these pin its scale.
pub const GR48_ANCHOR_FIRST: &str = "-11228550634163820692582736367065066800237662227759449345598861374381270810701586235392/1900359976262346454474448419809074880484088763429831167939681466204604687770731158447265625";
pub const GR48_ANCHOR_LAST: &str = "3/1690514664168754070821429178618909";

/// Generators and weighted degree of the Gr(4,8) discriminant expression.
pub fn gr48_generators() -> Vec<(String, u32)> {
    gens(&[
        ("f2", 2),
        ("f6", 6),
        ("f8", 8),
        ("f10", 10),
        ("f12", 12),
        ("f14", 14),
        ("f18", 18),
    ])
}

fn cube_vars(prefix: char, modes: usize, arity: u8) -> Vec<String> {
    // all digit strings of the given length over 0..arity, sorted
    let mut out = Vec::new();
    let mut idx = vec![0u8; modes];
    loop {
        let name: String = std::iter::once(prefix)
            .chain(idx.iter().map(|d| char::from(b'0' + d)))
            .collect();
        out.push(name);
        let mut pos = modes;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 < arity {
                idx[pos] += 1;
                for later in idx[pos + 1..].iter_mut() {
                    *later = 0;
                }
                break;
            }
        }
    }
}

fn var_index(vars: &[String], name: &str) -> usize {
    vars.iter().position(|v| v == name).expect("known variable")
}

/// Cayley's 2x2x2 hyperdeterminant: 12 monomials in x000..x111 with
/// coefficients in {1, 4, -2}.
pub fn delta222() -> CoordinatePolynomial {
    let vars = cube_vars('x', 3, 2);
    let mut p = CoordinatePolynomial::zero(vars.clone());
    let term = |p: &mut CoordinatePolynomial, quads: [&str; 4], c: i64| {
        let mut exps = vec![0u8; 8];
        for q in quads {
            exps[var_index(&vars, q)] += 1;
        }
        p.add_term(exps, crate::exactnum::rat_i64(c));
    };
    term(&mut p, ["x000", "x000", "x111", "x111"], 1);
    term(&mut p, ["x010", "x010", "x101", "x101"], 1);
    term(&mut p, ["x001", "x001", "x110", "x110"], 1);
    term(&mut p, ["x011", "x011", "x100", "x100"], 1);
    term(&mut p, ["x000", "x011", "x101", "x110"], 4);
    term(&mut p, ["x001", "x010", "x100", "x111"], 4);
    term(&mut p, ["x000", "x001", "x110", "x111"], -2);
    term(&mut p, ["x000", "x010", "x101", "x111"], -2);
    term(&mut p, ["x000", "x011", "x100", "x111"], -2);
    term(&mut p, ["x001", "x010", "x101", "x110"], -2);
    term(&mut p, ["x001", "x011", "x100", "x110"], -2);
    term(&mut p, ["x010", "x011", "x100", "x101"], -2);
    p
}

/// Discriminant of a binary cubic in the symmetrized coordinates.
pub fn binary_cubic_disc() -> CoordinatePolynomial {
    let vars: Vec<String> = ["s000", "s001", "s011", "s111"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut p = CoordinatePolynomial::zero(vars);
    let r = crate::exactnum::rat_i64;
    p.add_term(vec![2, 0, 0, 2], r(1));
    p.add_term(vec![0, 2, 2, 0], r(-3));
    p.add_term(vec![1, 1, 1, 1], r(-6));
    p.add_term(vec![1, 0, 3, 0], r(4));
    p.add_term(vec![0, 3, 0, 1], r(4));
    p
}

const GR36_SQUARES: [[[u8; 3]; 2]; 10] = [
    [[1, 2, 3], [4, 5, 6]],
    [[1, 2, 4], [3, 5, 6]],
    [[1, 2, 5], [3, 4, 6]],
    [[3, 4, 5], [1, 2, 6]],
    [[1, 3, 4], [2, 5, 6]],
    [[1, 3, 5], [2, 4, 6]],
    [[2, 4, 5], [1, 3, 6]],
    [[1, 4, 5], [2, 3, 6]],
    [[2, 3, 5], [1, 4, 6]],
    [[2, 3, 4], [1, 5, 6]],
];
const GR36_QUADS_4: [(i8, [[u8; 3]; 4]); 30] = [
    (1, [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]),
    (-1, [[1, 2, 3], [1, 4, 5], [3, 4, 6], [2, 5, 6]]),
    (-1, [[1, 2, 3], [2, 4, 5], [1, 4, 6], [3, 5, 6]]),
    (1, [[1, 2, 3], [3, 4, 5], [1, 4, 6], [2, 5, 6]]),
    (1, [[1, 2, 3], [2, 4, 5], [3, 4, 6], [1, 5, 6]]),
    (-1, [[1, 2, 3], [3, 4, 5], [2, 4, 6], [1, 5, 6]]),
    (1, [[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]]),
    (1, [[1, 2, 4], [1, 3, 5], [3, 4, 6], [2, 5, 6]]),
    (-1, [[1, 2, 4], [2, 3, 5], [1, 3, 6], [4, 5, 6]]),
    (-1, [[1, 2, 4], [3, 4, 5], [1, 3, 6], [2, 5, 6]]),
    (-1, [[1, 2, 4], [2, 3, 5], [3, 4, 6], [1, 5, 6]]),
    (1, [[1, 2, 4], [3, 4, 5], [2, 3, 6], [1, 5, 6]]),
    (-1, [[1, 3, 4], [1, 2, 5], [2, 3, 6], [4, 5, 6]]),
    (1, [[1, 3, 4], [1, 2, 5], [2, 4, 6], [3, 5, 6]]),
    (1, [[2, 3, 4], [1, 2, 5], [1, 3, 6], [4, 5, 6]]),
    (1, [[1, 2, 5], [3, 4, 5], [1, 3, 6], [2, 4, 6]]),
    (-1, [[2, 3, 4], [1, 2, 5], [1, 4, 6], [3, 5, 6]]),
    (-1, [[1, 2, 5], [3, 4, 5], [2, 3, 6], [1, 4, 6]]),
    (1, [[1, 3, 4], [2, 3, 5], [1, 2, 6], [4, 5, 6]]),
    (-1, [[1, 3, 4], [2, 4, 5], [1, 2, 6], [3, 5, 6]]),
    (-1, [[2, 3, 4], [1, 3, 5], [1, 2, 6], [4, 5, 6]]),
    (1, [[1, 3, 5], [2, 4, 5], [1, 2, 6], [3, 4, 6]]),
    (1, [[2, 3, 4], [1, 4, 5], [1, 2, 6], [3, 5, 6]]),
    (-1, [[2, 3, 5], [1, 4, 5], [1, 2, 6], [3, 4, 6]]),
    (1, [[1, 3, 4], [2, 3, 5], [2, 4, 6], [1, 5, 6]]),
    (-1, [[1, 3, 4], [2, 4, 5], [2, 3, 6], [1, 5, 6]]),
    (1, [[2, 3, 4], [1, 3, 5], [1, 4, 6], [2, 5, 6]]),
    (1, [[1, 3, 5], [2, 4, 5], [2, 3, 6], [1, 4, 6]]),
    (-1, [[2, 3, 4], [1, 4, 5], [1, 3, 6], [2, 5, 6]]),
    (1, [[2, 3, 5], [1, 4, 5], [1, 3, 6], [2, 4, 6]]),
];
const GR36_QUADS_2: [(i8, [[u8; 3]; 4]); 45] = [
    (-1, [[1, 2, 3], [1, 2, 4], [3, 5, 6], [4, 5, 6]]),
    (1, [[1, 2, 3], [1, 2, 5], [3, 4, 6], [4, 5, 6]]),
    (-1, [[1, 2, 3], [3, 4, 5], [1, 2, 6], [4, 5, 6]]),
    (1, [[1, 2, 3], [1, 3, 4], [2, 5, 6], [4, 5, 6]]),
    (-1, [[1, 2, 3], [1, 3, 5], [2, 4, 6], [4, 5, 6]]),
    (1, [[1, 2, 3], [2, 4, 5], [1, 3, 6], [4, 5, 6]]),
    (-1, [[1, 2, 3], [1, 4, 5], [2, 3, 6], [4, 5, 6]]),
    (1, [[1, 2, 3], [2, 3, 5], [1, 4, 6], [4, 5, 6]]),
    (-1, [[1, 2, 3], [2, 3, 4], [1, 5, 6], [4, 5, 6]]),
    (-1, [[1, 2, 4], [1, 2, 5], [3, 4, 6], [3, 5, 6]]),
    (1, [[1, 2, 4], [3, 4, 5], [1, 2, 6], [3, 5, 6]]),
    (-1, [[1, 2, 4], [1, 3, 4], [2, 5, 6], [3, 5, 6]]),
    (-1, [[1, 2, 4], [1, 3, 5], [2, 4, 6], [3, 5, 6]]),
    (1, [[1, 2, 4], [2, 4, 5], [1, 3, 6], [3, 5, 6]]),
    (-1, [[1, 2, 4], [1, 4, 5], [2, 3, 6], [3, 5, 6]]),
    (1, [[1, 2, 4], [2, 3, 5], [1, 4, 6], [3, 5, 6]]),
    (1, [[1, 2, 4], [2, 3, 4], [1, 5, 6], [3, 5, 6]]),
    (-1, [[1, 2, 5], [3, 4, 5], [1, 2, 6], [3, 4, 6]]),
    (-1, [[1, 3, 4], [1, 2, 5], [3, 4, 6], [2, 5, 6]]),
    (-1, [[1, 2, 5], [1, 3, 5], [2, 4, 6], [3, 4, 6]]),
    (-1, [[1, 2, 5], [2, 4, 5], [1, 3, 6], [3, 4, 6]]),
    (1, [[1, 2, 5], [1, 4, 5], [2, 3, 6], [3, 4, 6]]),
    (1, [[1, 2, 5], [2, 3, 5], [1, 4, 6], [3, 4, 6]]),
    (1, [[2, 3, 4], [1, 2, 5], [3, 4, 6], [1, 5, 6]]),
    (1, [[1, 3, 4], [3, 4, 5], [1, 2, 6], [2, 5, 6]]),
    (-1, [[1, 3, 5], [3, 4, 5], [1, 2, 6], [2, 4, 6]]),
    (-1, [[2, 4, 5], [3, 4, 5], [1, 2, 6], [1, 3, 6]]),
    (1, [[1, 4, 5], [3, 4, 5], [1, 2, 6], [2, 3, 6]]),
    (1, [[2, 3, 5], [3, 4, 5], [1, 2, 6], [1, 4, 6]]),
    (-1, [[2, 3, 4], [3, 4, 5], [1, 2, 6], [1, 5, 6]]),
    (-1, [[1, 3, 4], [1, 3, 5], [2, 4, 6], [2, 5, 6]]),
    (1, [[1, 3, 4], [2, 4, 5], [1, 3, 6], [2, 5, 6]]),
    (1, [[1, 3, 4], [1, 4, 5], [2, 3, 6], [2, 5, 6]]),
    (-1, [[1, 3, 4], [2, 3, 5], [1, 4, 6], [2, 5, 6]]),
    (-1, [[1, 3, 4], [2, 3, 4], [1, 5, 6], [2, 5, 6]]),
    (-1, [[1, 3, 5], [2, 4, 5], [1, 3, 6], [2, 4, 6]]),
    (-1, [[1, 3, 5], [1, 4, 5], [2, 3, 6], [2, 4, 6]]),
    (-1, [[1, 3, 5], [2, 3, 5], [1, 4, 6], [2, 4, 6]]),
    (-1, [[2, 3, 4], [1, 3, 5], [2, 4, 6], [1, 5, 6]]),
    (-1, [[1, 4, 5], [2, 4, 5], [1, 3, 6], [2, 3, 6]]),
    (-1, [[2, 3, 5], [2, 4, 5], [1, 3, 6], [1, 4, 6]]),
    (1, [[2, 3, 4], [2, 4, 5], [1, 3, 6], [1, 5, 6]]),
    (-1, [[2, 3, 5], [1, 4, 5], [2, 3, 6], [1, 4, 6]]),
    (1, [[2, 3, 4], [1, 4, 5], [2, 3, 6], [1, 5, 6]]),
    (-1, [[2, 3, 4], [2, 3, 5], [1, 4, 6], [1, 5, 6]]),
];

/// Sorted Plucker variable names `p123 .. p456` for `wedge^3 C^6`.
pub fn plucker_vars_36() -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=6u8 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                out.push(format!("p{i}{j}{k}"));
            }
        }
    }
    out
}

fn triple_name(t: &[u8; 3]) -> String {
    format!("p{}{}{}", t[0], t[1], t[2])
}

/// The defining quartic of the Gr(3,6) dual variety in Plucker coordinates
/// (10 squared terms, 30 terms with coefficient +-4, 45 with +-2).
pub fn gr36_dual() -> CoordinatePolynomial {
    let vars = plucker_vars_36();
    let mut p = CoordinatePolynomial::zero(vars.clone());
    let r = crate::exactnum::rat_i64;
    for [a, b] in &GR36_SQUARES {
        let mut exps = vec![0u8; vars.len()];
        exps[var_index(&vars, &triple_name(a))] += 2;
        exps[var_index(&vars, &triple_name(b))] += 2;
        p.add_term(exps, r(1));
    }
    for (scale, block) in [(4i64, &GR36_QUADS_4[..]), (2, &GR36_QUADS_2[..])] {
        for (sign, quad) in block {
            let mut exps = vec![0u8; vars.len()];
            for t in quad {
                exps[var_index(&vars, &triple_name(t))] += 1;
            }
            p.add_term(exps, r(scale * *sign as i64));
        }
    }
    p
}

/// The coordinate projection identifying 2x2x2 tensors inside
/// `wedge^3 C^6` via the blocks {1,4}, {2,5}, {3,6}: each Plucker variable
/// with one index per block maps to the signed cube variable (sign of the
/// block-ordering permutation); all others map to zero.
pub fn gr36_projection_map() -> (BTreeMap<String, SignedImage>, Vec<String>) {
    let blocks: [[u8; 2]; 3] = [[1, 4], [2, 5], [3, 6]];
    let mut map = BTreeMap::new();
    for i in 1..=6u8 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                let name = format!("p{i}{j}{k}");
                let mut digit = [None::<u8>; 3];
                let mut block_ordered = [0u8; 3];
                let mut dead = false;
                for idx in [i, j, k] {
                    let (b, pos) = blocks
                        .iter()
                        .enumerate()
                        .find_map(|(b, bl)| {
                            bl.iter().position(|&x| x == idx).map(|p| (b, p as u8))
                        })
                        .unwrap();
                    if digit[b].is_some() {
                        dead = true;
                        break;
                    }
                    digit[b] = Some(pos);
                    block_ordered[b] = idx;
                }
                if dead {
                    map.insert(name, SignedImage::Zero);
                    continue;
                }
                let mut inv = 0;
                for a in 0..3 {
                    for b in a + 1..3 {
                        if block_ordered[a] > block_ordered[b] {
                            inv += 1;
                        }
                    }
                }
                let sign = if inv % 2 == 0 { 1 } else { -1 };
                let target = format!(
                    "x{}{}{}",
                    digit[0].unwrap(),
                    digit[1].unwrap(),
                    digit[2].unwrap()
                );
                map.insert(name, SignedImage::Var(sign, target));
            }
        }
    }
    (map, cube_vars('x', 3, 2))
}

/// The symmetrization substitution `x_{ijk} -> s_{sort(ijk)}`.
pub fn symmetrization_map_222() -> (BTreeMap<String, SignedImage>, Vec<String>) {
    let mut map = BTreeMap::new();
    for name in cube_vars('x', 3, 2) {
        let mut digits: Vec<u8> = name[1..].bytes().map(|b| b - b'0').collect();
        digits.sort_unstable();
        let target: String = std::iter::once('s')
            .chain(digits.iter().map(|&d| char::from(b'0' + d)))
            .collect();
        map.insert(name, SignedImage::Var(1, target));
    }
    let targets = vec![
        "s000".to_string(),
        "s001".to_string(),
        "s011".to_string(),
        "s111".to_string(),
    ];
    (map, targets)
}

/// `f10 - (1/5) f2 (105 f2^4 - 119 f2 f6 + 27 f8)`, identically zero on
/// calibrated 2x2x2x2 invariant values.
pub fn f10_relation() -> InvariantExpression {
    expression_from_table(
        gens(&[("f2", 2), ("f6", 6), ("f8", 8), ("f10", 10)]),
        10,
        &[
            (&[0, 0, 0, 1], "1"),
            (&[5, 0, 0, 0], "-21"),
            (&[2, 1, 0, 0], "119/5"),
            (&[1, 0, 1, 0], "-27/5"),
        ],
    )
}

/// `f14` minus its expression in the lower invariants on 2x2x2x2 tensors.
pub fn f14_relation() -> InvariantExpression {
    expression_from_table(
        gens(&[("f2", 2), ("f6", 6), ("f8", 8), ("f12", 12), ("f14", 14)]),
        14,
        &[
            (&[0, 0, 0, 0, 1], "1"),
            (&[7, 0, 0, 0, 0], "6883811/675"),
            (&[4, 1, 0, 0, 0], "-13205038/1125"),
            (&[3, 0, 1, 0, 0], "4861087/3375"),
            (&[1, 2, 0, 0, 0], "217448/135"),
            (&[1, 0, 0, 1, 0], "-15407/225"),
            (&[0, 1, 1, 0, 0], "-9548/75"),
        ],
    )
}

/// `f18` minus its expression in the lower invariants on 2x2x2x2 tensors.
pub fn f18_relation() -> InvariantExpression {
    expression_from_table(
        gens(&[("f2", 2), ("f6", 6), ("f8", 8), ("f12", 12), ("f18", 18)]),
        18,
        &[
            (&[0, 0, 0, 0, 1], "1"),
            (&[9, 0, 0, 0, 0], "172149469/2025"),
            (&[6, 1, 0, 0, 0], "-291940571/3375"),
            (&[5, 0, 1, 0, 0], "99031064/10125"),
            (&[3, 2, 0, 0, 0], "200876924/50625"),
            (&[3, 0, 0, 1, 0], "-45023/135"),
            (&[2, 1, 1, 0, 0], "1311188/1875"),
            (&[1, 0, 2, 0, 0], "-42699/625"),
            (&[0, 3, 0, 0, 0], "240176/225"),
            (&[0, 1, 0, 1, 0], "-1204/25"),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_i64, Rat};
    use crate::exprdb::coordpoly::substitute;
    use num_traits::Zero;

    #[test]
    fn builtin_shapes() {
        assert_eq!(gr39_discriminant().len(), 28);
        assert_eq!(
            gr39_discriminant().coefficient(&[10, 0, 0, 0]),
            rat_i64(1)
        );
        assert_eq!(hd2222().len(), 16);
        assert_eq!(delta222().len(), 12);
        assert_eq!(gr36_dual().len(), 85);
        assert_eq!(binary_cubic_disc().len(), 5);
        assert!(builtin("gr39_discriminant").is_ok());
        assert!(builtin("nonsense").is_err());
    }

    #[test]
    fn delta222_coefficient_set() {
        let p = delta222();
        let mut counts = std::collections::BTreeMap::new();
        for (_, c) in p.terms() {
            *counts.entry(c.to_string()).or_insert(0usize) += 1;
        }
        assert_eq!(counts.get("1"), Some(&4));
        assert_eq!(counts.get("4"), Some(&2));
        assert_eq!(counts.get("-2"), Some(&6));
    }

    #[test]
    fn gr36_dual_projects_onto_delta222() {
        let (map, target) = gr36_projection_map();
        let projected = substitute(&gr36_dual(), &map, target).unwrap();
        assert_eq!(projected, delta222());
    }

    #[test]
    fn delta222_symmetrizes_to_binary_cubic() {
        let (map, target) = symmetrization_map_222();
        let sym = substitute(&delta222(), &map, target).unwrap();
        assert_eq!(sym, binary_cubic_disc());
    }

    #[test]
    fn delta222_vanishes_on_rank_one() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let p = delta222();
        for _ in 0..10 {
            let a: Vec<Rat> = (0..2).map(|_| rat_i64(rng.gen_range(-9..=9))).collect();
            let b: Vec<Rat> = (0..2).map(|_| rat_i64(rng.gen_range(-9..=9))).collect();
            let c: Vec<Rat> = (0..2).map(|_| rat_i64(rng.gen_range(-9..=9))).collect();
            let mut point = Vec::new();
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        point.push(&a[i] * &b[j] * &c[k]);
                    }
                }
            }
            assert!(p.evaluate(&point).is_zero());
        }
    }

    #[test]
    fn relations_evaluate_to_zero_on_slice_values() {
        use crate::roots::{cube2222_y_point, e7_restricted_roots, power_sum_invariant};
        let sys = e7_restricted_roots();
        let t: Vec<Rat> = [2, -3, 5, 7].iter().map(|&x| rat_i64(x)).collect();
        let y = cube2222_y_point(&t);
        let mut vals = std::collections::BTreeMap::new();
        for d in [2u32, 6, 8, 10, 12, 14, 18] {
            let f = power_sum_invariant(&sys, d).unwrap();
            vals.insert(format!("f{d}"), f.evaluate(&y));
        }
        for rel in [f10_relation(), f14_relation(), f18_relation()] {
            assert!(rel.evaluate(&vals).unwrap().is_zero());
        }
    }
}
