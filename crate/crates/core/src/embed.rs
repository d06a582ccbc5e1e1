//! Synthesis of a twist word realizing an extendable embedding.
//!
//! For an Arf-0 form `q`, partition the handle indices by the values
//! `(q(a_i), q(b_i))` into the four sets `Q_{r,s}`. The word
//!
//! ```text
//! h = prod_{i in Q01} T(a_i) . prod_{j in Q10} T(b_j) . prod_k T[c_k] T[d_k]
//! ```
//!
//! with `c_k ~ a_{i_k} + a_{j_k}` and `d_k ~ b_{i_k} + b_{j_k}` over the
//! paired-up `Q11` (Arf 0 forces `|Q11|` even) pulls the zero form on the
//! standard basis back to `q`. Precomposing the obvious unknotted
//! embedding with `h` therefore realizes any automorphism fixing `q` as
//! extendable with respect to that embedding.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::homology::CurveClass;
use crate::quadform::QuadraticForm;
use crate::twist::{TwistLetter, TwistWord};

/// The partition, pairing and word certifying one Arf-0 form.
#[derive(Clone, Debug)]
pub struct EmbeddingRecipe {
    pub q: QuadraticForm,
    /// Handle indices `1..=g` with `(q(a_i), q(b_i)) = (r, s)`.
    pub q00: Vec<usize>,
    pub q01: Vec<usize>,
    pub q10: Vec<usize>,
    pub q11: Vec<usize>,
    /// `q11` paired in increasing interleaved order.
    pub pairs: Vec<(usize, usize)>,
    pub word: TwistWord,
}

impl EmbeddingRecipe {
    pub fn to_json(&self) -> Value {
        let indices = |v: &[usize]| Value::Array(v.iter().map(|i| json!(i)).collect());
        let mut partition = Map::new();
        partition.insert("Q00".into(), indices(&self.q00));
        partition.insert("Q01".into(), indices(&self.q01));
        partition.insert("Q10".into(), indices(&self.q10));
        partition.insert("Q11".into(), indices(&self.q11));
        let pairs = Value::Array(
            self.pairs.iter().map(|(i, j)| json!([i, j])).collect(),
        );
        let mut map = Map::new();
        map.insert("q".into(), self.q.to_json());
        map.insert("partition".into(), Value::Object(partition));
        map.insert("pairs".into(), pairs);
        map.insert("word_text".into(), json!(self.word.to_text()));
        Value::Object(map)
    }
}

/// Build the recipe for a bounding form.
pub fn synthesize(q: &QuadraticForm) -> Result<EmbeddingRecipe> {
    if q.arf() {
        return Err(Error::NotBounding);
    }
    let space = q.space().clone();
    let genus = space.genus();
    let values = q.values();

    let mut q00 = Vec::new();
    let mut q01 = Vec::new();
    let mut q10 = Vec::new();
    let mut q11 = Vec::new();
    for i in 1..=genus {
        let qa = values.get(2 * (i - 1));
        let qb = values.get(2 * (i - 1) + 1);
        match (qa, qb) {
            (false, false) => q00.push(i),
            (false, true) => q01.push(i),
            (true, false) => q10.push(i),
            (true, true) => q11.push(i),
        }
    }
    debug_assert!(q11.len() % 2 == 0, "Arf 0 forces an even Q11");
    let pairs: Vec<(usize, usize)> = q11.chunks(2).map(|c| (c[0], c[1])).collect();

    let mut letters = Vec::new();
    for &i in &q01 {
        let name = format!("a{i}");
        letters.push(TwistLetter {
            curve: CurveClass::new(name.clone(), space.curve(&name)?),
            inverse: false,
        });
    }
    for &j in &q10 {
        let name = format!("b{j}");
        letters.push(TwistLetter {
            curve: CurveClass::new(name.clone(), space.curve(&name)?),
            inverse: false,
        });
    }
    for &(i, j) in &pairs {
        let a_sum = space.curve(&format!("a{i}"))? + space.curve(&format!("a{j}"))?;
        letters.push(TwistLetter {
            curve: CurveClass::new(format!("a{i}+a{j}"), a_sum),
            inverse: false,
        });
        let b_sum = space.curve(&format!("b{i}"))? + space.curve(&format!("b{j}"))?;
        letters.push(TwistLetter {
            curve: CurveClass::new(format!("b{i}+b{j}"), b_sum),
            inverse: false,
        });
    }

    Ok(EmbeddingRecipe {
        q: q.clone(),
        q00,
        q01,
        q10,
        q11,
        pairs,
        word: TwistWord::from_letters(space, letters),
    })
}

/// Check the defining identity of a recipe: pulling the zero-valued form
/// back along the word's action must reproduce the target form.
pub fn verify_recipe(recipe: &EmbeddingRecipe) -> bool {
    let zero = QuadraticForm::zero(recipe.word.space().clone());
    match zero.pullback(recipe.word.action().matrix()) {
        Ok(pulled) => pulled == recipe.q,
        Err(_) => false,
    }
}
