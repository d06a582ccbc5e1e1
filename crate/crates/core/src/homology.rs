//! The mod-2 first homology of a closed oriented surface.
//!
//! The canonical internal basis is the symplectic one, ordered
//! `a_1, b_1, ..., a_g, b_g` with `a_i . b_i = 1` and every other pairing
//! zero. Named curves (the twist chain `c_1..c_{2g+1}`, the low-genus
//! extras `d_k`, `e`, and the octagon edge classes) are stored as
//! change-of-basis data in a curve table keyed by name.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Mat, Gf2Vec};

/// Largest supported genus; keeps every vector inside one machine word.
pub const MAX_GENUS: usize = 32;

#[derive(Debug)]
pub struct HomologySpace {
    genus: usize,
    dim: usize,
    intersection: Gf2Mat,
    curve_table: BTreeMap<String, Gf2Vec>,
}

impl HomologySpace {
    /// The genus-`g` space with its symplectic basis and named-curve table.
    ///
    /// The chain classes satisfy `c_{2i} = a_i`, `c_{2i-1} = b_{i-1} + b_i`
    /// and `c_{2g+1} = c_1 + c_3 + ... + c_{2g-1}`; genus 3 additionally
    /// names `d1 = c1+c3`, genus 4 names `d1 = d'1 = c1+c3`,
    /// `d2 = d'2 = c1+c3+c5` and `e = c1+c2+c3+c4+c6`.
    pub fn standard(genus: usize) -> Result<Arc<Self>> {
        if genus < 1 || genus > MAX_GENUS {
            return Err(Error::GenusOutOfRange(genus));
        }
        let dim = 2 * genus;
        let mut intersection = Gf2Mat::zeros(dim, dim);
        for k in 0..genus {
            intersection.set(2 * k, 2 * k + 1, true);
            intersection.set(2 * k + 1, 2 * k, true);
        }

        let a = |i: usize| Gf2Vec::basis(dim, 2 * (i - 1));
        let b = |i: usize| Gf2Vec::basis(dim, 2 * (i - 1) + 1);

        let mut table = BTreeMap::new();
        for i in 1..=genus {
            table.insert(format!("a{i}"), a(i));
            table.insert(format!("b{i}"), b(i));
        }
        table.insert("c1".into(), b(1));
        for i in 2..=genus {
            table.insert(format!("c{}", 2 * i - 1), b(i - 1) + b(i));
        }
        for i in 1..=genus {
            table.insert(format!("c{}", 2 * i), a(i));
        }
        table.insert(format!("c{}", 2 * genus + 1), b(genus));

        if genus == 3 || genus == 4 {
            let chain: Vec<Gf2Vec> = (1..=2 * genus + 1)
                .map(|k| table[&format!("c{k}")])
                .collect();
            let c = |k: usize| chain[k - 1];
            table.insert("d1".into(), c(1) + c(3));
            if genus == 4 {
                table.insert("d'1".into(), c(1) + c(3));
                table.insert("d2".into(), c(1) + c(3) + c(5));
                table.insert("d'2".into(), c(1) + c(3) + c(5));
                table.insert("e".into(), c(1) + c(2) + c(3) + c(4) + c(6));
            }
        }

        Ok(Arc::new(HomologySpace { genus, dim, intersection, curve_table: table }))
    }

    /// The genus-2 space modelling a regular octagon with opposite edges
    /// identified. The four edge classes `e1..e4` pair as `e_i . e_j = 1`
    /// for `i != j` and relate to the canonical basis by `a1 = e1`,
    /// `b1 = e2`, `a2 = e1+e2+e3`, `b2 = e1+e2+e4`.
    pub fn octagon() -> Arc<Self> {
        let base = Self::standard(2).expect("genus 2 is supported");
        let a1 = base.curve_table["a1"];
        let b1 = base.curve_table["b1"];
        let a2 = base.curve_table["a2"];
        let b2 = base.curve_table["b2"];
        let mut table = base.curve_table.clone();
        table.insert("e1".into(), a1);
        table.insert("e2".into(), b1);
        table.insert("e3".into(), a1 + b1 + a2);
        table.insert("e4".into(), a1 + b1 + b2);
        Arc::new(HomologySpace {
            genus: 2,
            dim: 4,
            intersection: base.intersection.clone(),
            curve_table: table,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn intersection(&self) -> &Gf2Mat {
        &self.intersection
    }

    /// The `i`-th canonical basis vector, `0 <= i < 2g`.
    pub fn basis_vector(&self, i: usize) -> Gf2Vec {
        Gf2Vec::basis(self.dim, i)
    }

    /// Label of the `i`-th canonical basis vector: `a1, b1, a2, ...`.
    pub fn basis_label(&self, i: usize) -> String {
        assert!(i < self.dim, "basis index {i} out of range");
        let pair = i / 2 + 1;
        if i % 2 == 0 {
            format!("a{pair}")
        } else {
            format!("b{pair}")
        }
    }

    /// Index of a canonical basis label, if it is one.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        if label.len() < 2 || !label.is_ascii() {
            return None;
        }
        let (kind, rest) = label.split_at(1);
        let i: usize = rest.parse().ok()?;
        if i < 1 || i > self.genus {
            return None;
        }
        match kind {
            "a" => Some(2 * (i - 1)),
            "b" => Some(2 * (i - 1) + 1),
            _ => None,
        }
    }

    pub fn curve(&self, name: &str) -> Result<Gf2Vec> {
        self.curve_table
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn curve_names(&self) -> impl Iterator<Item = &str> {
        self.curve_table.keys().map(String::as_str)
    }

    /// The chain basis `c_1, ..., c_{2g}` as canonical-coordinate columns.
    pub fn chain_basis(&self) -> Vec<Gf2Vec> {
        (1..=self.dim)
            .map(|k| self.curve_table[&format!("c{k}")])
            .collect()
    }

    /// Mod-2 intersection number of two classes.
    pub fn pair(&self, x: &Gf2Vec, y: &Gf2Vec) -> bool {
        assert_eq!(x.dim(), self.dim, "pairing dimension mismatch");
        x.dot(&self.intersection.mul_vec(y))
    }

    /// Sum of `e_i . e_j` over all index pairs `i < j` in the support of
    /// `x`: the cross-term of the polarization identity on canonical
    /// coordinates.
    pub(crate) fn mutual_intersection(&self, x: &Gf2Vec) -> bool {
        let support: Vec<usize> = x.support().collect();
        let mut total = false;
        for (k, &i) in support.iter().enumerate() {
            for &j in &support[k + 1..] {
                total ^= self.intersection.get(i, j);
            }
        }
        total
    }

    /// Whether a square matrix preserves the intersection pairing.
    pub fn preserves_pairing(&self, m: &Gf2Mat) -> bool {
        if m.rows() != self.dim || m.cols() != self.dim {
            return false;
        }
        &(&m.transpose() * &self.intersection) * m == self.intersection
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub name: String,
    pub cls: Gf2Vec,
}

impl CurveClass {
    pub fn new(name: impl Into<String>, cls: Gf2Vec) -> Self {
        CurveClass { name: name.into(), cls }
    }
}
