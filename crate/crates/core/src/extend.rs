//! The main pipeline: invariant quadratic forms of a homology action,
//! the 4-sphere extendability verdict, and its certificates.
//!
//! An action `f` fixes a form `q` exactly when the basis values satisfy
//! `q(e_i) = q(f(e_i))` for every canonical basis vector. Expanding the
//! right side through polarization turns this into an affine GF(2) system
//! in the unknowns `q(e_1), ..., q(e_2g)`; its solution set is a coset of
//! dimension `d = dim ker(f - id)`, so there are exactly `2^d` invariant
//! forms. The verdict is positive exactly when one of them has Arf
//! invariant 0.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::gf2::{self, Gf2Mat, Gf2Vec};
use crate::quadform::QuadraticForm;
use crate::twist::HomologyAction;

/// Exact counts are produced for family dimensions up to this cap; larger
/// families fall back to the quadratic-size Arf shortcut.
pub const ENUMERATION_CAP: usize = 20;

/// The coset of invariant forms: a base invariant form plus the span of
/// linear functionals vanishing on `Im(f - id)`.
#[derive(Clone, Debug)]
pub struct InvariantFormFamily {
    base: QuadraticForm,
    functionals: Vec<Gf2Vec>,
}

impl InvariantFormFamily {
    pub fn base(&self) -> &QuadraticForm {
        &self.base
    }

    /// Basis of the functionals, as coordinate vectors of their values on
    /// the canonical basis.
    pub fn functionals(&self) -> &[Gf2Vec] {
        &self.functionals
    }

    /// Dimension of the family; the member count is `2^d`.
    pub fn d(&self) -> usize {
        self.functionals.len()
    }

    pub fn member_count(&self) -> u128 {
        1u128 << self.d()
    }

    /// The member selected by a subset of functionals.
    pub fn member(&self, mask: u64) -> QuadraticForm {
        if self.d() < 64 {
            assert!(mask >> self.d() == 0, "member mask out of range");
        }
        let mut values = self.base.values();
        for (i, xi) in self.functionals.iter().enumerate() {
            if mask >> i & 1 == 1 {
                values += *xi;
            }
        }
        QuadraticForm::new(self.base.space().clone(), values)
    }

    /// All `2^d` members; guarded by the enumeration cap.
    pub fn members(&self) -> impl Iterator<Item = QuadraticForm> + '_ {
        assert!(self.d() <= ENUMERATION_CAP, "family too large to enumerate");
        (0..1u64 << self.d()).map(|mask| self.member(mask))
    }
}

/// Verdict plus certificates for one action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendabilityReport {
    pub extendable: bool,
    /// `dim ker(f - id)`.
    pub d: usize,
    /// `2^d`, the number of invariant forms.
    pub invariant_count: u128,
    /// Arf tallies over the family; absent above the enumeration cap.
    pub arf_zero_count: Option<u128>,
    pub arf_one_count: Option<u128>,
    /// An invariant form with Arf 0: the lexicographically smallest one
    /// (by basis values) when counts are exact, the first one the shortcut
    /// finds otherwise.
    pub witness: Option<QuadraticForm>,
}

impl ExtendabilityReport {
    pub fn to_json(&self) -> Value {
        let count_value = |n: u128| {
            u64::try_from(n).map_or_else(|_| json!(n.to_string()), |v| json!(v))
        };
        let mut map = Map::new();
        map.insert("extendable".into(), json!(self.extendable));
        map.insert("d".into(), json!(self.d));
        map.insert("invariant_count".into(), count_value(self.invariant_count));
        map.insert(
            "arf_zero_count".into(),
            self.arf_zero_count.map_or(Value::Null, count_value),
        );
        map.insert(
            "arf_one_count".into(),
            self.arf_one_count.map_or(Value::Null, count_value),
        );
        map.insert(
            "witness".into(),
            self.witness.as_ref().map_or(Value::Null, QuadraticForm::to_json),
        );
        Value::Object(map)
    }
}

/// Solve for every invariant form of the action.
///
/// Every pairing-preserving action has at least one invariant form, so an
/// inconsistent system can only come from an implementation defect and is
/// reported as an internal error.
pub fn invariant_forms(action: &HomologyAction) -> Result<InvariantFormFamily> {
    let space = action.space();
    let dim = space.dim();
    let identity = Gf2Mat::identity(dim);

    // Row i of the system: q(e_i) + sum_j t_ij q(e_j) = sum_{j<k} t_ij t_ik e_j.e_k,
    // where f(e_i) = sum_j t_ij e_j. The coefficient matrix is I + M^T and
    // the right side is the polarization cross-term of each image column.
    let coefficients = &action.matrix().transpose() + &identity;
    let mut rhs = Gf2Vec::zero(dim);
    for i in 0..dim {
        rhs.set(i, space.mutual_intersection(&action.matrix().column(i)));
    }

    let solution = gf2::solve_affine(&coefficients, &rhs);
    let particular = solution.particular.ok_or_else(|| {
        Error::Internal("invariant-form system inconsistent for a pairing-preserving action".into())
    })?;

    // Functionals: the annihilator of Im(f - id), per the kernel count.
    let difference = action.matrix() + &identity;
    let image: Vec<Gf2Vec> = (0..dim).map(|j| difference.column(j)).collect();
    let functionals = gf2::annihilator_basis(&image, dim);
    if functionals.len() != solution.kernel_basis.len() {
        return Err(Error::Internal(format!(
            "annihilator dimension {} disagrees with solution kernel {}",
            functionals.len(),
            solution.kernel_basis.len()
        )));
    }

    Ok(InvariantFormFamily {
        base: QuadraticForm::new(space.clone(), particular),
        functionals,
    })
}

/// Decide extendability and produce the report.
pub fn decide(action: &HomologyAction) -> Result<ExtendabilityReport> {
    let family = invariant_forms(action)?;
    let d = family.d();

    if d <= ENUMERATION_CAP {
        let mut zero = 0u128;
        let mut one = 0u128;
        let mut witness: Option<QuadraticForm> = None;
        for q in family.members() {
            if q.arf() {
                one += 1;
            } else {
                zero += 1;
                if witness.as_ref().map_or(true, |w| q.values() < w.values()) {
                    witness = Some(q);
                }
            }
        }
        Ok(ExtendabilityReport {
            extendable: zero > 0,
            d,
            invariant_count: family.member_count(),
            arf_zero_count: Some(zero),
            arf_one_count: Some(one),
            witness,
        })
    } else {
        let witness = shortcut_candidates(&family).find(|q| !q.arf());
        Ok(ExtendabilityReport {
            extendable: witness.is_some(),
            d,
            invariant_count: family.member_count(),
            arf_zero_count: None,
            arf_one_count: None,
            witness,
        })
    }
}

/// Whether the family contains a form with Arf invariant 0, checked on at
/// most `(d^2 + d + 2) / 2` members: the base, each single functional
/// shift, and each pair shift.
///
/// The Arf invariant of `q_0 + sum t_i xi_i` is a polynomial of degree two
/// in the `t_i`, so if it is 1 on all those members its constant term is 1
/// and every other coefficient vanishes, making it constantly 1.
pub fn arf_shortcut(family: &InvariantFormFamily) -> bool {
    arf_shortcut_counted(family).0
}

/// Shortcut verdict together with the number of Arf evaluations spent.
pub fn arf_shortcut_counted(family: &InvariantFormFamily) -> (bool, usize) {
    let mut evaluations = 0;
    for q in shortcut_candidates(family) {
        evaluations += 1;
        if !q.arf() {
            return (true, evaluations);
        }
    }
    (false, evaluations)
}

fn shortcut_candidates(
    family: &InvariantFormFamily,
) -> impl Iterator<Item = QuadraticForm> + '_ {
    let d = family.d();
    let base = std::iter::once(family.base().clone());
    let singles = (0..d).map(move |i| family.base().add_functional(&family.functionals()[i]));
    let pairs = (0..d).flat_map(move |i| {
        (i + 1..d).map(move |j| {
            family
                .base()
                .add_functional(&family.functionals()[i])
                .add_functional(&family.functionals()[j])
        })
    });
    base.chain(singles).chain(pairs)
}

/// The closed-form unique invariant form when `f - id` is invertible:
/// `q(x) = x . (f - id)^{-1}(x)`.
pub fn unique_form(action: &HomologyAction) -> Result<QuadraticForm> {
    let space = action.space();
    let dim = space.dim();
    let difference = action.matrix() + &Gf2Mat::identity(dim);
    let inverse = difference.inverse().map_err(|_| Error::NotUnique)?;
    let mut values = Gf2Vec::zero(dim);
    for i in 0..dim {
        values.set(i, space.pair(&space.basis_vector(i), &inverse.column(i)));
    }
    Ok(QuadraticForm::new(space.clone(), values))
}
