//! Quadratic forms on mod-2 homology and their Arf invariants.
//!
//! A form is stored by its values on the canonical basis; evaluation on an
//! arbitrary class expands through the polarization identity
//! `q(x + y) = q(x) + q(y) + x . y`, so the stored bits determine the whole
//! function.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Mat, Gf2Vec};
use crate::homology::HomologySpace;

/// Guard for full enumeration of `2^dim` forms.
pub const ENUMERATION_DIM_CAP: usize = 24;

#[derive(Clone)]
pub struct QuadraticForm {
    space: Arc<HomologySpace>,
    values: Gf2Vec,
}

impl QuadraticForm {
    pub fn new(space: Arc<HomologySpace>, values: Gf2Vec) -> Self {
        assert_eq!(values.dim(), space.dim(), "value vector dimension mismatch");
        QuadraticForm { space, values }
    }

    /// The form vanishing on every canonical basis vector.
    pub fn zero(space: Arc<HomologySpace>) -> Self {
        let values = Gf2Vec::zero(space.dim());
        QuadraticForm { space, values }
    }

    pub fn space(&self) -> &Arc<HomologySpace> {
        &self.space
    }

    /// Values on the canonical basis.
    pub fn values(&self) -> Gf2Vec {
        self.values
    }

    /// Evaluate on an arbitrary homology class via polarization:
    /// `q(sum x_i) = sum q(x_i) + sum_{i<j} x_i . x_j` over the support.
    pub fn evaluate(&self, x: &Gf2Vec) -> bool {
        assert_eq!(x.dim(), self.space.dim(), "evaluation dimension mismatch");
        let mut value = self.space.mutual_intersection(x);
        for i in x.support() {
            value ^= self.values.get(i);
        }
        value
    }

    /// Arf invariant `sum_i q(a_i) q(b_i)` over the symplectic basis.
    pub fn arf(&self) -> bool {
        let mut total = false;
        for k in 0..self.space.genus() {
            total ^= self.values.get(2 * k) & self.values.get(2 * k + 1);
        }
        total
    }

    /// Pull back along a homology action: the result takes on `e_i` the
    /// value of `q` on `action(e_i)`.
    ///
    /// The matrix must preserve the intersection pairing; otherwise the
    /// returned values would not satisfy the polarization identity.
    pub fn pullback(&self, action: &Gf2Mat) -> Result<QuadraticForm> {
        if !self.space.preserves_pairing(action) {
            return Err(Error::NotSymplectic);
        }
        let mut values = Gf2Vec::zero(self.space.dim());
        for i in 0..self.space.dim() {
            values.set(i, self.evaluate(&action.column(i)));
        }
        Ok(QuadraticForm { space: self.space.clone(), values })
    }

    /// The form shifted by a linear functional, `x -> q(x) + xi(x)`;
    /// on basis values this is a plain XOR.
    pub fn add_functional(&self, xi: &Gf2Vec) -> QuadraticForm {
        QuadraticForm { space: self.space.clone(), values: self.values + *xi }
    }

    /// Build a form from its values on a set of named curves that must form
    /// a basis; canonical values are recovered through polarization.
    pub fn from_curve_values(
        space: &Arc<HomologySpace>,
        assignments: &[(&str, bool)],
    ) -> Result<Self> {
        let classes = assignments
            .iter()
            .map(|(name, _)| space.curve(name))
            .collect::<Result<Vec<_>>>()?;
        if classes.len() != space.dim() {
            return Err(Error::NotABasis);
        }
        let basis = Gf2Mat::from_columns(&classes);
        let inverse = basis.inverse().map_err(|_| Error::NotABasis)?;

        let mut values = Gf2Vec::zero(space.dim());
        for k in 0..space.dim() {
            // Coordinates of e_k in the given basis.
            let coords = inverse.column(k);
            let support: Vec<usize> = coords.support().collect();
            let mut v = false;
            for (pos, &i) in support.iter().enumerate() {
                v ^= assignments[i].1;
                for &j in &support[pos + 1..] {
                    v ^= space.pair(&classes[i], &classes[j]);
                }
            }
            values.set(k, v);
        }
        Ok(QuadraticForm { space: space.clone(), values })
    }

    /// Build a form from a complete `label -> bit` map over the canonical
    /// basis labels `a1, b1, ..., ag, bg`.
    pub fn from_label_values(
        space: &Arc<HomologySpace>,
        labels: &serde_json::Map<String, Value>,
    ) -> Result<Self> {
        for key in labels.keys() {
            if space.label_index(key).is_none() {
                return Err(Error::UnknownLabel(key.clone()));
            }
        }
        let mut values = Gf2Vec::zero(space.dim());
        for i in 0..space.dim() {
            let label = space.basis_label(i);
            let raw = labels.get(&label).ok_or_else(|| Error::MissingLabel(label.clone()))?;
            let bit = match raw {
                Value::Number(n) if n.as_u64() == Some(0) => false,
                Value::Number(n) if n.as_u64() == Some(1) => true,
                Value::Bool(b) => *b,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "value for `{label}` must be 0 or 1"
                    )))
                }
            };
            values.set(i, bit);
        }
        Ok(QuadraticForm { space: space.clone(), values })
    }

    /// Serialize as a `label -> bit` JSON map.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for i in 0..self.space.dim() {
            map.insert(self.space.basis_label(i), json!(u8::from(self.values.get(i))));
        }
        Value::Object(map)
    }
}

impl PartialEq for QuadraticForm {
    fn eq(&self, other: &Self) -> bool {
        // Equal basis values on spaces of the same dimension define the
        // same function.
        self.space.dim() == other.space.dim() && self.values == other.values
    }
}

impl Eq for QuadraticForm {}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm(g={}, values={})", self.space.genus(), self.values)
    }
}

/// All `2^(2g)` quadratic forms of the space, each exactly once.
pub fn enumerate_all(
    space: &Arc<HomologySpace>,
) -> Result<impl Iterator<Item = QuadraticForm>> {
    let dim = space.dim();
    if dim > ENUMERATION_DIM_CAP {
        return Err(Error::EnumerationTooLarge { dim, cap: ENUMERATION_DIM_CAP });
    }
    let space = space.clone();
    Ok((0..1u64 << dim).map(move |bits| {
        QuadraticForm::new(space.clone(), Gf2Vec::from_bits(dim, bits))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(g: usize) -> Arc<HomologySpace> {
        HomologySpace::standard(g).unwrap()
    }

    #[test]
    fn polarization_forces_cross_term() {
        let s = space(1);
        let q = QuadraticForm::zero(s.clone());
        let x = s.curve("a1").unwrap() + s.curve("b1").unwrap();
        assert!(q.evaluate(&x));
    }

    #[test]
    fn zero_class_evaluates_to_zero() {
        let s = space(2);
        for q in enumerate_all(&s).unwrap() {
            assert!(!q.evaluate(&Gf2Vec::zero(4)));
        }
    }

    #[test]
    fn chain_evaluation_on_closing_curve() {
        // q(c_i) = 1 for i <= 6 forces q(c7) = q(c1+c3+c5) = 1: the three
        // odd chain classes are pairwise disjoint, so no cross-terms.
        let s = space(3);
        let q = QuadraticForm::from_curve_values(
            &s,
            &[("c1", true), ("c2", true), ("c3", true), ("c4", true), ("c5", true), ("c6", true)],
        )
        .unwrap();
        let c7 = s.curve("c7").unwrap();
        assert!(q.evaluate(&c7));
    }

    #[test]
    fn arf_of_zero_form_vanishes() {
        assert!(!QuadraticForm::zero(space(3)).arf());
    }

    #[test]
    fn arf_of_all_ones_chain_form_is_zero() {
        let s = space(3);
        let q = QuadraticForm::from_curve_values(
            &s,
            &[("c1", true), ("c2", true), ("c3", true), ("c4", true), ("c5", true), ("c6", true)],
        )
        .unwrap();
        // In chain values: 1*1 + 1*(1+1) + 1*(1+1+1) = 0.
        assert!(!q.arf());
    }

    #[test]
    fn arf_of_genus_one_all_ones_is_one() {
        let s = space(1);
        let q = QuadraticForm::new(s, Gf2Vec::from_bits(2, 0b11));
        assert!(q.arf());
    }

    #[test]
    fn enumeration_counts_and_arf_tallies() {
        let s = space(1);
        let forms: Vec<_> = enumerate_all(&s).unwrap().collect();
        assert_eq!(forms.len(), 4);
        let zeros = forms.iter().filter(|q| !q.arf()).count();
        assert_eq!(zeros, 3);

        let s2 = space(2);
        let zeros2 = enumerate_all(&s2).unwrap().filter(|q| !q.arf()).count();
        assert_eq!(zeros2, 10);
    }

    #[test]
    fn enumeration_guard_rejects_large_spaces() {
        let s = space(13);
        assert!(matches!(
            enumerate_all(&s).map(|_| ()),
            Err(Error::EnumerationTooLarge { dim: 26, cap: 24 })
        ));
    }

    #[test]
    fn pullback_by_identity_is_identity() {
        let s = space(2);
        for q in enumerate_all(&s).unwrap() {
            assert_eq!(q.pullback(&Gf2Mat::identity(4)).unwrap(), q);
        }
    }

    #[test]
    fn pullback_rejects_non_symplectic_matrices() {
        let s = space(1);
        let q = QuadraticForm::zero(s);
        assert!(matches!(q.pullback(&Gf2Mat::zeros(2, 2)), Err(Error::NotSymplectic)));
    }

    #[test]
    fn from_curve_values_requires_a_basis() {
        let s = space(2);
        // c1..c4 is a basis, but a1, a2, b1 is too short.
        assert!(matches!(
            QuadraticForm::from_curve_values(&s, &[("a1", true), ("a2", false), ("b1", true)]),
            Err(Error::NotABasis)
        ));
        // a1, a1, b1, b2 is dependent.
        assert!(matches!(
            QuadraticForm::from_curve_values(
                &s,
                &[("a1", true), ("a1", false), ("b1", true), ("b2", false)]
            ),
            Err(Error::NotABasis)
        ));
    }

    #[test]
    fn from_curve_values_round_trips_on_chain_basis() {
        let s = space(3);
        let names: Vec<String> = (1..=6).map(|k| format!("c{k}")).collect();
        for bits in 0..64u64 {
            let assignments: Vec<(&str, bool)> = names
                .iter()
                .enumerate()
                .map(|(i, n)| (n.as_str(), bits >> i & 1 == 1))
                .collect();
            let q = QuadraticForm::from_curve_values(&s, &assignments).unwrap();
            for (name, value) in &assignments {
                assert_eq!(q.evaluate(&s.curve(name).unwrap()), *value);
            }
        }
    }

    #[test]
    fn label_map_round_trip() {
        let s = space(2);
        let q = QuadraticForm::new(s.clone(), Gf2Vec::from_bits(4, 0b0110));
        let json = q.to_json();
        let map = json.as_object().unwrap();
        let back = QuadraticForm::from_label_values(&s, map).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn label_map_requires_every_label() {
        let s = space(2);
        let mut map = Map::new();
        map.insert("a1".into(), json!(1));
        assert!(matches!(
            QuadraticForm::from_label_values(&s, &map),
            Err(Error::MissingLabel(_))
        ));
        map.insert("z9".into(), json!(0));
        assert!(matches!(
            QuadraticForm::from_label_values(&s, &map),
            Err(Error::UnknownLabel(_))
        ));
    }
}
