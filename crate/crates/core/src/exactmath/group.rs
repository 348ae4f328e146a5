//! Finite abelian groups given by invariant factors, and their characters.

use std::fmt;

use num_integer::Integer;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// `Z_{d_1} x ... x Z_{d_k}`. Elements are tuples, enumerated in
/// lexicographic order so that index 0 is always the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

pub type GroupElem = Vec<u64>;

impl FinAbGroup {
    pub fn new(factors: Vec<u64>) -> Result<FinAbGroup> {
        if factors.iter().any(|&d| d == 0) {
            return Err(Error::UnsupportedInfiniteGroup);
        }
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> FinAbGroup {
        FinAbGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Result<FinAbGroup> {
        FinAbGroup::new(vec![n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, &d| acc.lcm(&d))
    }

    pub fn zero(&self) -> GroupElem {
        vec![0; self.factors.len()]
    }

    pub fn elements(&self) -> Vec<GroupElem> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    /// The `i`-th element in lexicographic order (last coordinate fastest).
    pub fn element(&self, mut i: usize) -> GroupElem {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (i as u64) % d;
            i /= d as usize;
        }
        out
    }

    pub fn index_of(&self, g: &[u64]) -> usize {
        assert_eq!(g.len(), self.factors.len(), "element has wrong rank");
        g.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&x, &d)| acc * d as usize + (x % d) as usize)
    }

    pub fn contains(&self, g: &[u64]) -> bool {
        g.len() == self.factors.len() && g.iter().zip(&self.factors).all(|(&x, &d)| x < d)
    }

    pub fn add(&self, g: &[u64], h: &[u64]) -> GroupElem {
        g.iter()
            .zip(h)
            .zip(&self.factors)
            .map(|((&a, &b), &d)| (a + b) % d)
            .collect()
    }

    pub fn neg(&self, g: &[u64]) -> GroupElem {
        g.iter()
            .zip(&self.factors)
            .map(|(&a, &d)| (d - a % d) % d)
            .collect()
    }

    pub fn sub(&self, g: &[u64], h: &[u64]) -> GroupElem {
        self.add(g, &self.neg(h))
    }

    // Index-level versions; the other modules mostly work with indices.
    pub fn add_idx(&self, i: usize, j: usize) -> usize {
        self.index_of(&self.add(&self.element(i), &self.element(j)))
    }

    pub fn neg_idx(&self, i: usize) -> usize {
        self.index_of(&self.neg(&self.element(i)))
    }

    pub fn sub_idx(&self, i: usize, j: usize) -> usize {
        self.add_idx(i, self.neg_idx(j))
    }

    pub fn element_order(&self, g: &[u64]) -> u64 {
        g.iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &d)| acc.lcm(&(d / x.gcd(&d))))
    }

    pub fn format_element(&self, g: &[u64]) -> String {
        let parts: Vec<String> = g.iter().map(u64::to_string).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("xZ").replace("xZZ", "xZ"))
    }
}

/// A homomorphism `G -> F^x`.
///
/// With `r` the order of the root `w` used and `e_i = gcd(r, d_i)`, the
/// character with exponents `t` sends `g` to `w^(sum_i t_i (r/e_i) g_i)`,
/// `0 <= t_i < e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: FinAbGroup,
    field: Field,
    exponents: Vec<u64>,
    root_order: u64,
    values: Vec<Scalar>,
}

impl Character {
    fn build(group: &FinAbGroup, field: Field, root_order: u64, root: &Scalar, exponents: Vec<u64>) -> Character {
        let steps: Vec<u64> = group
            .factors()
            .iter()
            .map(|&d| root_order / root_order.gcd(&d))
            .collect();
        let values = group
            .elements()
            .iter()
            .map(|g| {
                let e = g
                    .iter()
                    .zip(&exponents)
                    .zip(&steps)
                    .map(|((&gi, &ti), &si)| gi * ti * si)
                    .sum::<u64>()
                    % root_order;
                root.pow(e)
            })
            .collect();
        Character {
            group: group.clone(),
            field,
            exponents,
            root_order,
            values,
        }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&t| t == 0)
    }

    pub fn eval(&self, g: &[u64]) -> Scalar {
        self.values[self.group.index_of(g)].clone()
    }

    pub fn eval_idx(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    /// Values at the group elements, in element order.
    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Exponent tuple of the pointwise product.
    pub fn product_exponents(&self, other: &Character) -> Vec<u64> {
        let dual = self.dual_factors();
        self.exponents
            .iter()
            .zip(&other.exponents)
            .zip(&dual)
            .map(|((&a, &b), &e)| (a + b) % e)
            .collect()
    }

    pub fn inverse_exponents(&self) -> Vec<u64> {
        self.exponents
            .iter()
            .zip(self.dual_factors())
            .map(|(&a, e)| (e - a) % e)
            .collect()
    }

    fn dual_factors(&self) -> Vec<u64> {
        self.group
            .factors()
            .iter()
            .map(|&d| self.root_order.gcd(&d))
            .collect()
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
        format!("chi({})", parts.join(","))
    }
}

/// The full group `Hom(G, F^x)` together with its parametrisation.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub group: FinAbGroup,
    pub field: Field,
    /// Invariant factors `gcd(r, d_i)` of the dual group.
    pub dual: FinAbGroup,
    pub characters: Vec<Character>,
}

impl CharacterGroup {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn index_of_exponents(&self, t: &[u64]) -> usize {
        self.dual.index_of(t)
    }

    /// Index of the pointwise product of characters `i` and `j`.
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.dual.add_idx(i, j)
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.dual.neg_idx(i)
    }

    /// Whether this is all of the `|G|` characters, i.e. the field holds
    /// enough roots of unity.
    pub fn is_complete(&self) -> bool {
        self.characters.len() == self.group.order()
    }
}

/// `Hom(G, F^x)`, whatever its size. In characteristic p dividing |G| this
/// has fewer than `|G|` elements.
pub fn character_group(group: &FinAbGroup, field: Field) -> Result<CharacterGroup> {
    let r = group.exponent().gcd(&field.roots_of_unity_order());
    let root = field.primitive_root(r)?;
    let dual = FinAbGroup::new(group.factors().iter().map(|&d| r.gcd(&d)).collect())?;
    let characters = dual
        .elements()
        .into_iter()
        .map(|t| Character::build(group, field, r, &root, t))
        .collect();
    Ok(CharacterGroup {
        group: group.clone(),
        field,
        dual,
        characters,
    })
}

/// All `|G|` characters; fails unless `F` contains a primitive root of
/// unity of order `exponent(G)`.
pub fn characters(group: &FinAbGroup, field: Field) -> Result<Vec<Character>> {
    let n = group.exponent();
    field.primitive_root(n)?;
    let cg = character_group(group, field)?;
    debug_assert!(cg.is_complete());
    Ok(cg.characters)
}

/// Both orthogonality relations, summed exactly over all pairs.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OrthogonalityReport {
    pub group_order: usize,
    pub pairs_checked: usize,
    /// `(g, h)` index pairs where `sum_chi chi(g) chi(-h) != |G| delta`.
    pub element_violations: Vec<(usize, usize)>,
    /// `(chi, psi)` index pairs where `sum_g chi(g) psi(-g) != |G| delta`.
    pub character_violations: Vec<(usize, usize)>,
}

impl OrthogonalityReport {
    pub fn holds(&self) -> bool {
        self.element_violations.is_empty() && self.character_violations.is_empty()
    }
}

fn require_invertible_order(group: &FinAbGroup, field: Field) -> Result<()> {
    let p = field.characteristic();
    let order = group.order() as u64;
    if p != 0 && order % p == 0 {
        return Err(Error::CharacteristicDividesOrder {
            characteristic: p,
            order,
        });
    }
    Ok(())
}

pub fn verify_orthogonality(group: &FinAbGroup, field: Field) -> Result<OrthogonalityReport> {
    require_invertible_order(group, field)?;
    let chars = characters(group, field)?;
    let n = group.order();
    let size = field.from_i64(n as i64);
    let zero = field.zero();
    let mut element_violations = Vec::new();
    let mut character_violations = Vec::new();
    for g in 0..n {
        for h in 0..n {
            let mh = group.neg_idx(h);
            let mut acc = field.zero();
            for chi in &chars {
                acc = &acc + &(chi.eval_idx(g) * chi.eval_idx(mh));
            }
            if acc != if g == h { size.clone() } else { zero.clone() } {
                element_violations.push((g, h));
            }
        }
    }
    for (a, chi) in chars.iter().enumerate() {
        for (b, psi) in chars.iter().enumerate() {
            let mut acc = field.zero();
            for g in 0..n {
                acc = &acc + &(chi.eval_idx(g) * psi.eval_idx(group.neg_idx(g)));
            }
            if acc != if a == b { size.clone() } else { zero.clone() } {
                character_violations.push((a, b));
            }
        }
    }
    Ok(OrthogonalityReport {
        group_order: n,
        pairs_checked: 2 * n * n,
        element_violations,
        character_violations,
    })
}

pub fn char_to_function(chi: &Character) -> Vec<Scalar> {
    chi.values().to_vec()
}

/// Coefficients of `f: G -> F` in the character basis:
/// `c_eta = (1/|G|) sum_l eta(-l) f(l)`.
pub fn function_to_char(group: &FinAbGroup, field: Field, f: &[Scalar]) -> Result<Vec<Scalar>> {
    require_invertible_order(group, field)?;
    if f.len() != group.order() {
        return Err(Error::DimensionMismatch(format!(
            "function has {} values, group has {} elements",
            f.len(),
            group.order()
        )));
    }
    let chars = characters(group, field)?;
    let inv = field.from_i64(group.order() as i64).inv().expect("order is a unit");
    Ok(chars
        .iter()
        .map(|eta| {
            let mut acc = field.zero();
            for (l, fl) in f.iter().enumerate() {
                acc = &acc + &(eta.eval_idx(group.neg_idx(l)) * fl);
            }
            &acc * &inv
        })
        .collect())
}

/// Inverse of [`function_to_char`]: `g -> sum_eta c_eta eta(g)`.
pub fn char_combination_to_function(chars: &[Character], coeffs: &[Scalar]) -> Vec<Scalar> {
    let group = chars[0].group();
    (0..group.order())
        .map(|g| {
            chars
                .iter()
                .zip(coeffs)
                .fold(chars[0].field().zero(), |acc, (eta, c)| &acc + &(c * eta.eval_idx(g)))
        })
        .collect()
}
