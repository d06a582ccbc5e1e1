//! Composite and periodic example maps: the builtin catalog, connected
//! sums at the homology level, the non-extendable period-8 families, the
//! odd-orbit verdict for punctured surfaces, and Nielsen conjugacy data.


use crate::error::{Error, Result};
use crate::gf2::{Gf2Mat, Gf2Vec};
use crate::homology::{HomologySpace, MAX_GENUS};
use crate::twist::{parse_word, HomologyAction, TwistWord};

/// How a catalog entry's action was produced.
#[derive(Clone, Debug)]
pub enum MapSource {
    Word(TwistWord),
    ExplicitMatrix,
}

/// A named catalog entry.
#[derive(Clone, Debug)]
pub struct BuiltinMap {
    pub name: String,
    pub genus: usize,
    pub source: MapSource,
    pub action: HomologyAction,
    pub notes: String,
}

/// Twist words of the twelve torsion representatives on the genus-4
/// surface, in chain-and-extras curve names.
pub const GENUS4_WORDS: [(&str, &str); 12] = [
    ("f4_1", "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8)"),
    ("f4_2", "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8) T(c8)"),
    ("f4_3", "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8) T(c9)"),
    (
        "f4_4",
        "(T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8) T(c9))^5 \
         T(c9) T(c8) T(c7) T(c6) T(c5) T(c4) T(c3) T(c2) T(c1)",
    ),
    ("f4_5", "T(d2) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8)"),
    ("f4_6", "T(d2) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8) T(c5) T(c6)"),
    ("f4_7", "T(d2) T(c4) T(c5) T(c6) T(c7) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8)"),
    ("f4_8", "T(e) T(d2) T(c6) T(c8) T(c7) T(c6) T(c5) T(c4) T(c3)"),
    ("f4_9", "T'(d2) T'(c6) T'(c7) T'(c8) T'(c9) T(d1) T(c4) T(c3) T(c2) T(c1)"),
    ("f4_10", "T(c9) T(c8) T'(d2) T'(c6) T'(c5) T'(c4) T'(d'1) T(c2) T(c1)"),
    ("f4_11", "T'(c9) (T(c7) T(d'2) T(c6) T(c5) T(c4) T(c3) T(c2))^2"),
    (
        "f4_12",
        "T'(c7) T'(d2) T'(c6) T'(c7) T'(d'2) T'(c6) T'(c7) T'(c8) \
         T(c3) T(d1) T(c4) T(c3) T(d'1) T(c4) T(c3) T(c2)",
    ),
];

const F3_3_WORD: &str = "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7)";
const F3_7_WORD: &str = "T(d1) T(c3) T(c4) T(c5) T(c2) T(c3) T(c4) T(c5) T(c6)";

/// Golden copy of the genus-4 action table: entry `[i][j]` is the image of
/// `c_{j+1}` under the `i`-th word, as a bitmask over `c_1..c_8` with bit
/// `k-1` standing for `c_k`.
pub const GENUS4_ACTION_TABLE: [[u8; 8]; 12] = [
    [0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0xFF],
    [0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x7F, 0xFF],
    [0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x55],
    [0x10, 0x20, 0x40, 0x80, 0x55, 0xAA, 0x01, 0x02],
    [0x03, 0x04, 0x08, 0x10, 0x35, 0x40, 0x80, 0xEB],
    [0x03, 0x04, 0x08, 0x25, 0x40, 0x75, 0xF5, 0xEB],
    [0x03, 0x0C, 0x10, 0x35, 0x40, 0x6D, 0xED, 0xEB],
    [0x2E, 0xC4, 0xC6, 0x04, 0x27, 0x0A, 0x1A, 0x75],
    [0x0A, 0x01, 0x02, 0x04, 0x28, 0x40, 0x80, 0x55],
    [0x03, 0x01, 0x2B, 0x05, 0x08, 0x10, 0xA0, 0xD5],
    [0x4A, 0x20, 0x6B, 0x02, 0x04, 0x08, 0x70, 0xA0],
    [0x0F, 0x0E, 0x0B, 0x0D, 0x44, 0x35, 0xF5, 0xE0],
];

/// Recompute the genus-4 action table from the catalog words, in chain
/// coordinates.
pub fn genus4_computed_table() -> Result<[[u8; 8]; 12]> {
    let mut table = [[0u8; 8]; 12];
    for (i, (name, _)) in GENUS4_WORDS.iter().enumerate() {
        let entry = builtin(name)?;
        let space = entry.action.space().clone();
        let chain = space.chain_basis();
        let to_chain = Gf2Mat::from_columns(&chain)
            .inverse()
            .expect("chain classes form a basis");
        for (j, row) in table[i].iter_mut().enumerate() {
            let image = entry.action.apply(&chain[j]);
            *row = to_chain.mul_vec(&image).bits() as u8;
        }
    }
    Ok(table)
}

/// Render a chain-coordinate bitmask as `c1+c3+...`.
pub fn chain_mask_label(mask: u8) -> String {
    if mask == 0 {
        return "0".into();
    }
    (0..8)
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| format!("c{}", k + 1))
        .collect::<Vec<_>>()
        .join("+")
}

/// Direct sum of actions, blocks in canonical basis order on the
/// genus-sum space. Models gluing automorphisms along separating circles:
/// the summands act independently on their homology blocks.
pub fn block_sum(parts: &[HomologyAction]) -> Result<HomologyAction> {
    if parts.is_empty() {
        return Err(Error::EmptySum);
    }
    let genus: usize = parts.iter().map(|p| p.space().genus()).sum();
    let space = HomologySpace::standard(genus)?;
    let mut matrix = Gf2Mat::zeros(space.dim(), space.dim());
    let mut offset = 0;
    for part in parts {
        let dim = part.space().dim();
        for r in 0..dim {
            for c in 0..dim {
                if part.matrix().get(r, c) {
                    matrix.set(offset + r, offset + c, true);
                }
            }
        }
        offset += dim;
    }
    Ok(HomologyAction::from_parts(space, matrix))
}

/// Extendability of a sum from its parts' Arf profiles, each given as
/// `(has_arf0, has_arf1)` over the part's invariant forms.
///
/// If some part has both, a bounding total form can always be arranged;
/// otherwise the total Arf invariant is the number of unbounding-only
/// parts, so the sum extends exactly when that count is even.
pub fn sum_verdict(parts: &[(bool, bool)]) -> Result<bool> {
    if parts.is_empty() {
        return Err(Error::EmptySum);
    }
    if parts.iter().any(|&(h0, h1)| !h0 && !h1) {
        return Err(Error::InvalidPartProfile);
    }
    if parts.iter().any(|&(h0, h1)| h0 && h1) {
        return Ok(true);
    }
    let unbounding_only = parts.iter().filter(|&&(h0, _)| !h0).count();
    Ok(unbounding_only % 2 == 0)
}

/// Fixed catalog names (the period-8 family `hg(g)` is parametric on top
/// of these).
pub fn builtin_names() -> Vec<&'static str> {
    let mut names = vec!["f3_3", "f3_7", "f3", "f3_prime", "f2_octagon", "w1_torus"];
    names.extend(GENUS4_WORDS.iter().map(|(name, _)| *name));
    names
}

/// Look up a catalog entry by name. `hg(g)` (also accepted as `hgN`)
/// builds the period-8 non-extendable family member of genus `g`.
pub fn builtin(name: &str) -> Result<BuiltinMap> {
    if let Some(rest) = name.strip_prefix("hg") {
        let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        let genus: usize = digits
            .parse()
            .map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
        return hg(genus);
    }
    match name {
        "f3_3" => word_builtin("f3_3", 3, F3_3_WORD, "order-8 chain twist product"),
        "f3_7" => word_builtin("f3_7", 3, F3_7_WORD, "order-8 twist product through d1"),
        "f3" => word_builtin(
            "f3",
            3,
            F3_7_WORD,
            "period-8 rotation of the octagon-with-squares model; entered via a \
             conjugate twist word, which leaves the verdict and Arf profile unchanged",
        ),
        "f3_prime" => word_builtin(
            "f3_prime",
            3,
            F3_3_WORD,
            "period-8 rotation of the second genus-3 polygon model; entered via a \
             conjugate twist word, which leaves the verdict and Arf profile unchanged",
        ),
        "f2_octagon" => Ok(octagon_builtin()),
        "w1_torus" => {
            let space = HomologySpace::standard(1)?;
            let matrix = Gf2Mat::parse_rows("01;11")?;
            let action = HomologyAction::new(space, matrix)?;
            Ok(BuiltinMap {
                name: "w1_torus".into(),
                genus: 1,
                source: MapSource::ExplicitMatrix,
                action,
                notes: "mod-2 shadow of the order-6 torus rotation".into(),
            })
        }
        _ => {
            if let Some((_, word)) = GENUS4_WORDS.iter().find(|(n, _)| *n == name) {
                word_builtin(name, 4, word, "genus-4 torsion representative")
            } else {
                Err(Error::UnknownBuiltin(name.to_string()))
            }
        }
    }
}

fn word_builtin(name: &str, genus: usize, text: &str, notes: &str) -> Result<BuiltinMap> {
    let word = parse_word(genus, text)?;
    let action = word.action();
    Ok(BuiltinMap {
        name: name.into(),
        genus,
        source: MapSource::Word(word),
        action,
        notes: notes.into(),
    })
}

/// The period-8 rotation of the octagon model of the genus-2 surface. On
/// homology it cycles the edge classes `e1 -> e2 -> e3 -> e4 -> e1`.
fn octagon_builtin() -> BuiltinMap {
    let space = HomologySpace::octagon();
    let edges: Vec<Gf2Vec> = (1..=4)
        .map(|k| space.curve(&format!("e{k}")).unwrap())
        .collect();
    let edge_to_canonical = Gf2Mat::from_columns(&edges);
    let canonical_to_edge = edge_to_canonical
        .inverse()
        .expect("octagon edge classes form a basis");
    let mut cycle = Gf2Mat::zeros(4, 4);
    for i in 0..4 {
        cycle.set((i + 1) % 4, i, true);
    }
    let matrix = &(&edge_to_canonical * &cycle) * &canonical_to_edge;
    let action = HomologyAction::new(space, matrix)
        .expect("the edge cycle preserves the pairing");
    BuiltinMap {
        name: "f2_octagon".into(),
        genus: 2,
        source: MapSource::ExplicitMatrix,
        action,
        notes: "pi/4 rotation of the octagon with opposite edges identified".into(),
    }
}

/// The period-8 non-extendable family: a homology-level connected sum of
/// octagon-model rotations chosen so that the number of unbounding-only
/// summands is odd.
fn hg(genus: usize) -> Result<BuiltinMap> {
    if genus == 1 {
        return Err(Error::UnsupportedBuiltin(
            "hg(1): the period-8 construction needs genus >= 2; use w1_torus for a \
             genus-1 non-extendable map"
                .into(),
        ));
    }
    if genus == 4 {
        return Err(Error::UnsupportedBuiltin(
            "hg(4): every torsion mapping class of the genus-4 surface is extendable, \
             so no such example exists"
                .into(),
        ));
    }
    if genus < 2 || genus > MAX_GENUS {
        return Err(Error::GenusOutOfRange(genus));
    }

    let f2 = builtin("f2_octagon")?.action;
    let f3 = builtin("f3")?.action;
    let f3_prime = builtin("f3_prime")?.action;

    let mut parts: Vec<HomologyAction> = Vec::new();
    let notes;
    if genus == 5 {
        parts.push(f2.clone());
        parts.push(f3_prime);
        notes = "period-8 sum of f2 and f3_prime".to_string();
    } else {
        match genus % 4 {
            0 => {
                // genus >= 8 here since 4 is rejected above.
                parts.extend(std::iter::repeat(f3.clone()).take(2));
                parts.extend(std::iter::repeat(f2.clone()).take((genus - 6) / 2));
                notes = format!("period-8 sum of 2 copies of f3 and {} of f2", (genus - 6) / 2);
            }
            1 => {
                // genus >= 9 here since 1 and 5 are handled above.
                parts.extend(std::iter::repeat(f3.clone()).take(3));
                parts.extend(std::iter::repeat(f2.clone()).take((genus - 9) / 2));
                notes = format!("period-8 sum of 3 copies of f3 and {} of f2", (genus - 9) / 2);
            }
            2 => {
                parts.extend(std::iter::repeat(f2.clone()).take(genus / 2));
                notes = format!("period-8 sum of {} copies of f2", genus / 2);
            }
            _ => {
                parts.push(f3.clone());
                parts.extend(std::iter::repeat(f2.clone()).take((genus - 3) / 2));
                notes = format!("period-8 sum of f3 and {} copies of f2", (genus - 3) / 2);
            }
        }
    }

    let action = block_sum(&parts)?;
    Ok(BuiltinMap {
        name: format!("hg({genus})"),
        genus,
        source: MapSource::ExplicitMatrix,
        action,
        notes,
    })
}

/// Conjugacy invariants of a periodic map: period, puncture count of the
/// quotient orbifold, and the valency multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenData {
    period: u64,
    valencies: Vec<u64>,
}

impl NielsenData {
    pub fn new(period: u64, mut valencies: Vec<u64>) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidInput("period must be positive".into()));
        }
        if let Some(&bad) = valencies.iter().find(|&&v| v >= period) {
            return Err(Error::InvalidInput(format!(
                "valency {bad} outside 0..{period}"
            )));
        }
        valencies.sort_unstable();
        Ok(NielsenData { period, valencies })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn punctures(&self) -> usize {
        self.valencies.len()
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }
}

/// Periodic maps are conjugate exactly when all three invariants agree.
pub fn nielsen_equal(x: &NielsenData, y: &NielsenData) -> bool {
    x == y
}

/// Boundary-orbit lengths of an automorphism of a surface with boundary.
#[derive(Clone, Debug)]
pub struct OrbitProfile {
    orbit_lengths: Vec<usize>,
}

impl OrbitProfile {
    pub fn new(orbit_lengths: Vec<usize>) -> Result<Self> {
        if orbit_lengths.is_empty() {
            return Err(Error::InvalidInput("orbit profile needs at least one orbit".into()));
        }
        if orbit_lengths.contains(&0) {
            return Err(Error::InvalidInput("orbit lengths must be positive".into()));
        }
        Ok(OrbitProfile { orbit_lengths })
    }

    pub fn orbit_lengths(&self) -> &[usize] {
        &self.orbit_lengths
    }

    pub fn boundary_count(&self) -> usize {
        self.orbit_lengths.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PuncturedVerdict {
    Extendable,
    Unknown,
}

/// An automorphism of a punctured surface extends whenever some boundary
/// orbit has odd length (in particular whenever the boundary count is
/// odd). No converse is available, so even-only profiles report unknown.
pub fn punctured_verdict(profile: &OrbitProfile) -> PuncturedVerdict {
    if profile.orbit_lengths().iter().any(|&len| len % 2 == 1) {
        PuncturedVerdict::Extendable
    } else {
        PuncturedVerdict::Unknown
    }
}
