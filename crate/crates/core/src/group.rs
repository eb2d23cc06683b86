//! Finite abelian groups written as products of cyclic groups, and the
//! Sidon checks over them.
//!
//! A set `D` is Sidon when all ordered differences `a - b` (`a != b`) are
//! distinct, which is equivalent to all sums `a + b` (repeats allowed) being
//! distinct. Both checks are implemented independently and return a
//! collision witness on failure.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{ext_gcd, gcd_u64};
use crate::error::{Error, Result};

/// `Z_{m_1} x ... x Z_{m_r}` with every `m_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GroupSpec {
    moduli: Vec<u64>,
}

impl TryFrom<Vec<u64>> for GroupSpec {
    type Error = Error;
    fn try_from(moduli: Vec<u64>) -> Result<Self> {
        GroupSpec::new(moduli)
    }
}

impl From<GroupSpec> for Vec<u64> {
    fn from(g: GroupSpec) -> Self {
        g.moduli
    }
}

/// A residue vector; `residues[i]` lies in `[0, m_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [r] = self.residues.as_slice() {
            return write!(f, "{r}");
        }
        let parts: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GroupSpec {
    /// Each modulus must be at least 2, except for the trivial group `[1]`.
    pub fn new(moduli: Vec<u64>) -> Result<GroupSpec> {
        let trivial = moduli == [1];
        if moduli.is_empty() || (!trivial && moduli.iter().any(|&m| m < 2)) {
            return Err(Error::InvalidGroup(moduli));
        }
        if moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .is_none()
        {
            return Err(Error::InvalidGroup(moduli));
        }
        Ok(GroupSpec { moduli })
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Result<GroupSpec> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// The modulus when the group is a single cyclic factor.
    pub fn as_cyclic(&self) -> Option<u64> {
        match self.moduli.as_slice() {
            [n] => Some(*n),
            _ => None,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.moduli.len()],
        }
    }

    pub fn element(&self, residues: Vec<u64>) -> Result<GroupElement> {
        if residues.len() != self.moduli.len()
            || residues.iter().zip(&self.moduli).any(|(r, m)| r >= m)
        {
            return Err(Error::InvalidElement {
                element: residues,
                moduli: self.moduli.clone(),
            });
        }
        Ok(GroupElement { residues })
    }

    /// Mixed-radix index with the first factor most significant, so index
    /// order agrees with lexicographic order of residue vectors.
    pub fn index_of(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        Ok(self.index_unchecked(a))
    }

    fn index_unchecked(&self, a: &GroupElement) -> u64 {
        a.residues
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (r, m)| acc * m + r)
    }

    /// Inverse of [`GroupSpec::index_of`].
    pub fn element_at(&self, mut index: u64) -> GroupElement {
        debug_assert!(index < self.order());
        let mut residues = vec![0; self.moduli.len()];
        for (slot, m) in residues.iter_mut().zip(&self.moduli).rev() {
            *slot = index % m;
            index /= m;
        }
        GroupElement { residues }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.residues.len() != self.moduli.len()
            || a.residues.iter().zip(&self.moduli).any(|(r, m)| r >= m)
        {
            return Err(Error::InvalidElement {
                element: a.residues.clone(),
                moduli: self.moduli.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_unchecked(a, b))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.sub_unchecked(&self.identity(), a))
    }

    fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        GroupElement { residues }
    }

    fn sub_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + m - y) % m)
            .collect();
        GroupElement { residues }
    }

    /// One representative of every abelian group of order `n`, as invariant
    /// factor chains `d_1 | d_2 | ... | d_r` with product `n`. Order 1 has no
    /// representation here and yields an empty list.
    pub fn all_of_order(n: u64) -> Vec<GroupSpec> {
        // each factor is a multiple of the previous one, so whatever remains
        // after choosing d must be 1 or a multiple of d
        fn extend(rest: u64, prev: u64, acc: &mut Vec<u64>, out: &mut Vec<GroupSpec>) {
            if rest == 1 {
                out.push(GroupSpec {
                    moduli: acc.clone(),
                });
                return;
            }
            let mut d = prev.max(2);
            while d <= rest {
                if d.is_multiple_of(prev)
                    && rest.is_multiple_of(d)
                    && (rest == d || (rest / d).is_multiple_of(d))
                {
                    acc.push(d);
                    extend(rest / d, d, acc, out);
                    acc.pop();
                }
                d += 1;
            }
        }
        let mut out = Vec::new();
        if n >= 2 {
            extend(n, 1, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Which family of equations collided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CollisionKind {
    Difference,
    Sum,
}

/// Two distinct pairs with the same difference (`a - b`) or sum (`a + b`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub kind: CollisionKind,
    pub first: [GroupElement; 2],
    pub second: [GroupElement; 2],
    pub value: GroupElement,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            CollisionKind::Difference => '-',
            CollisionKind::Sum => '+',
        };
        write!(
            f,
            "{} {op} {} = {} {op} {} = {}",
            self.first[0], self.first[1], self.second[0], self.second[1], self.value
        )
    }
}

impl std::error::Error for Collision {}

/// A set of distinct elements of a group, kept in increasing index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidonSequence {
    group: GroupSpec,
    elements: Vec<GroupElement>,
}

impl SidonSequence {
    /// Wraps a candidate set. Distinctness and membership are checked here;
    /// the Sidon property itself is not.
    pub fn new(group: GroupSpec, elements: Vec<GroupElement>) -> Result<SidonSequence> {
        let mut keyed = Vec::with_capacity(elements.len());
        for e in elements {
            keyed.push((group.index_of(&e)?, e));
        }
        keyed.sort_by_key(|(i, _)| *i);
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateElement(w[0].1.residues.clone()));
            }
        }
        let elements = keyed.into_iter().map(|(_, e)| e).collect();
        Ok(SidonSequence { group, elements })
    }

    /// A subset of `Z_n` given by its residues.
    pub fn cyclic(n: u64, residues: &[u64]) -> Result<SidonSequence> {
        let group = GroupSpec::cyclic(n)?;
        let elements = residues
            .iter()
            .map(|&r| group.element(vec![r]))
            .collect::<Result<_>>()?;
        Self::new(group, elements)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Residues of a sequence over a cyclic group.
    pub fn residues(&self) -> Option<Vec<u64>> {
        self.group.as_cyclic()?;
        Some(self.elements.iter().map(|e| e.residues[0]).collect())
    }

    fn indices(&self) -> Vec<u64> {
        self.elements
            .iter()
            .map(|e| self.group.index_unchecked(e))
            .collect()
    }

    /// All `m(m-1)` ordered differences of distinct elements are distinct.
    pub fn verify_sidon(&self) -> Result<(), Box<Collision>> {
        let mut seen: HashMap<u64, (usize, usize)> = HashMap::new();
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let d = self.group.sub_unchecked(a, b);
                if let Some(&(k, l)) = seen.get(&self.group.index_unchecked(&d)) {
                    return Err(Box::new(Collision {
                        kind: CollisionKind::Difference,
                        first: [self.elements[k].clone(), self.elements[l].clone()],
                        second: [a.clone(), b.clone()],
                        value: d,
                    }));
                }
                seen.insert(self.group.index_unchecked(&d), (i, j));
            }
        }
        Ok(())
    }

    /// All `m(m+1)/2` sums `a_i + a_j`, `i <= j`, are distinct.
    pub fn verify_sidon_sums(&self) -> Result<(), Box<Collision>> {
        self.check_sums(true)
    }

    /// All sums over strictly distinct pairs `i < j` are distinct.
    pub fn verify_weak_sidon(&self) -> Result<(), Box<Collision>> {
        self.check_sums(false)
    }

    fn check_sums(&self, with_repeats: bool) -> Result<(), Box<Collision>> {
        let mut seen: HashMap<u64, (usize, usize)> = HashMap::new();
        for i in 0..self.elements.len() {
            let start = if with_repeats { i } else { i + 1 };
            for j in start..self.elements.len() {
                let s = self
                    .group
                    .add_unchecked(&self.elements[i], &self.elements[j]);
                let key = self.group.index_unchecked(&s);
                if let Some(&(k, l)) = seen.get(&key) {
                    return Err(Box::new(Collision {
                        kind: CollisionKind::Sum,
                        first: [self.elements[k].clone(), self.elements[l].clone()],
                        second: [self.elements[i].clone(), self.elements[j].clone()],
                        value: s,
                    }));
                }
                seen.insert(key, (i, j));
            }
        }
        Ok(())
    }

    pub fn is_sidon(&self) -> bool {
        self.verify_sidon().is_ok()
    }

    /// The multiset of ordered differences as counts indexed by group index.
    pub fn difference_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.group.order() as usize];
        let idx = self.indices();
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if idx[i] != idx[j] {
                    let d = self.group.sub_unchecked(a, b);
                    counts[self.group.index_unchecked(&d) as usize] += 1;
                }
            }
        }
        counts
    }

    /// Adds a constant to every element.
    pub fn translate(&self, by: &GroupElement) -> Result<SidonSequence> {
        let elements = self
            .elements
            .iter()
            .map(|e| self.group.add(e, by))
            .collect::<Result<_>>()?;
        Self::new(self.group.clone(), elements)
    }
}

/// Chinese-remainder isomorphism from a product of pairwise coprime cyclic
/// groups onto `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtMap {
    source: GroupSpec,
    n: u64,
    /// basis[i] is 1 mod m_i and 0 mod every other factor.
    basis: Vec<u64>,
}

/// The isomorphism `g -> Z_n`; fails unless the moduli are pairwise coprime.
pub fn crt_flatten(g: &GroupSpec) -> Result<CrtMap> {
    let m = g.moduli();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if gcd_u64(m[i], m[j]) != 1 {
                return Err(Error::NotCoprime(m.to_vec()));
            }
        }
    }
    let n = g.order();
    let basis = m
        .iter()
        .map(|&mi| {
            let rest = n / mi;
            let inv = ext_gcd((rest % mi) as i64, mi as i64)
                .1
                .rem_euclid(mi as i64) as u128;
            ((rest as u128 * inv) % n as u128) as u64
        })
        .collect();
    Ok(CrtMap {
        source: g.clone(),
        n,
        basis,
    })
}

impl CrtMap {
    pub fn source(&self) -> &GroupSpec {
        &self.source
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn target(&self) -> GroupSpec {
        GroupSpec::cyclic(self.n).expect("order of a valid group is at least 2")
    }

    pub fn apply(&self, a: &GroupElement) -> Result<u64> {
        self.source.check(a)?;
        let n = self.n as u128;
        Ok(a.residues
            .iter()
            .zip(&self.basis)
            .fold(0u128, |acc, (&r, &e)| (acc + r as u128 * e as u128) % n) as u64)
    }

    pub fn invert(&self, x: u64) -> Result<GroupElement> {
        if x >= self.n {
            return Err(Error::InvalidElement {
                element: vec![x],
                moduli: vec![self.n],
            });
        }
        Ok(GroupElement {
            residues: self.source.moduli.iter().map(|m| x % m).collect(),
        })
    }

    pub fn map_sequence(&self, s: &SidonSequence) -> Result<SidonSequence> {
        if s.group() != &self.source {
            return Err(Error::GroupMismatch {
                expected: self.n,
                got: s.group().moduli.clone(),
            });
        }
        let residues = s
            .elements()
            .iter()
            .map(|e| self.apply(e))
            .collect::<Result<Vec<_>>>()?;
        SidonSequence::cyclic(self.n, &residues)
    }
}

// JSON: cyclic groups use {"modulus":n,"elements":[ints]}, products use
// {"moduli":[..],"elements":[[..],..]}. Either form is accepted on input, and
// plain integers are accepted as elements of single-factor groups.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ElementJson {
    Int(u64),
    Vec(Vec<u64>),
}

#[derive(Serialize, Deserialize)]
struct SequenceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    moduli: Option<Vec<u64>>,
    elements: Vec<ElementJson>,
}

impl Serialize for SidonSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let json = match self.group.as_cyclic() {
            Some(n) => SequenceJson {
                modulus: Some(n),
                moduli: None,
                elements: self
                    .elements
                    .iter()
                    .map(|e| ElementJson::Int(e.residues[0]))
                    .collect(),
            },
            None => SequenceJson {
                modulus: None,
                moduli: Some(self.group.moduli.clone()),
                elements: self
                    .elements
                    .iter()
                    .map(|e| ElementJson::Vec(e.residues.clone()))
                    .collect(),
            },
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SidonSequence {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = SequenceJson::deserialize(deserializer)?;
        let moduli = match (json.modulus, json.moduli) {
            (Some(n), None) => vec![n],
            (None, Some(m)) => m,
            (Some(n), Some(m)) if m == [n] => m,
            _ => {
                return Err(D::Error::custom(
                    "expected exactly one of `modulus` or `moduli`",
                ))
            }
        };
        let group = GroupSpec::new(moduli).map_err(D::Error::custom)?;
        let elements = json
            .elements
            .into_iter()
            .map(|e| match e {
                ElementJson::Int(x) => group.element(vec![x]),
                ElementJson::Vec(v) => group.element(v),
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SidonSequence::new(group, elements).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, r: &[u64]) -> SidonSequence {
        SidonSequence::cyclic(n, r).unwrap()
    }

    #[test]
    fn group_operations() {
        let g = GroupSpec::cyclic(42).unwrap();
        let (a, b) = (g.element(vec![37]).unwrap(), g.element(vec![33]).unwrap());
        assert_eq!(g.sub(&a, &b).unwrap().residues(), &[4]);
        let g = GroupSpec::new(vec![6, 7]).unwrap();
        let (a, b) = (
            g.element(vec![5, 5]).unwrap(),
            g.element(vec![1, 3]).unwrap(),
        );
        assert_eq!(g.sub(&a, &b).unwrap().residues(), &[4, 2]);
        assert_eq!(g.sub(&a, &a).unwrap(), g.identity());
        assert_eq!(g.add(&a, &g.neg(&a).unwrap()).unwrap(), g.identity());
    }

    #[test]
    fn group_errors() {
        assert!(GroupSpec::new(vec![]).is_err());
        assert!(GroupSpec::new(vec![6, 1]).is_err());
        let g = GroupSpec::new(vec![6, 7]).unwrap();
        assert!(g.element(vec![6, 0]).is_err());
        assert!(g.element(vec![1]).is_err());
        let bad = GroupElement { residues: vec![1] };
        assert!(matches!(
            g.add(&g.identity(), &bad),
            Err(Error::InvalidElement { .. })
        ));
    }

    #[test]
    fn index_round_trip_and_order() {
        let g = GroupSpec::new(vec![3, 2, 2]).unwrap();
        let all: Vec<_> = g.elements().collect();
        assert_eq!(all.len(), 12);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(g.index_of(e).unwrap(), i as u64);
        }
    }

    #[test]
    fn known_example_is_sidon() {
        let s = z(42, &[0, 8, 10, 11, 33, 37]);
        assert!(s.verify_sidon().is_ok());
        assert!(s.verify_sidon_sums().is_ok());
        assert!(s.verify_weak_sidon().is_ok());
    }

    #[test]
    fn difference_collision_with_involution() {
        let w = z(6, &[0, 1, 3]).verify_sidon().unwrap_err();
        assert_eq!(w.kind, CollisionKind::Difference);
        assert_eq!(w.value.residues(), &[3]);
        let pairs = [w.first[0].residues()[0], w.first[1].residues()[0]];
        let pairs2 = [w.second[0].residues()[0], w.second[1].residues()[0]];
        assert_eq!(pairs, [0, 3]);
        assert_eq!(pairs2, [3, 0]);
    }

    #[test]
    fn trivial_sets() {
        assert!(z(5, &[2]).verify_sidon().is_ok());
        assert!(z(5, &[]).verify_sidon().is_ok());
        assert!(z(5, &[]).verify_sidon_sums().is_ok());
        assert!(z(5, &[]).verify_weak_sidon().is_ok());
    }

    #[test]
    fn sums_versus_weak_sums() {
        let s = z(4, &[0, 1, 2]);
        let w = s.verify_sidon_sums().unwrap_err();
        assert_eq!(w.value.residues(), &[2]);
        assert!(s.verify_weak_sidon().is_ok());
        assert!(s.verify_sidon().is_err());

        let w = z(8, &[0, 1, 2, 3]).verify_weak_sidon().unwrap_err();
        assert_eq!(w.value.residues(), &[3]);
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            SidonSequence::cyclic(7, &[1, 3, 1]),
            Err(Error::DuplicateElement(vec![1]))
        );
    }

    #[test]
    fn crt_examples() {
        let g = GroupSpec::new(vec![6, 7]).unwrap();
        let phi = crt_flatten(&g).unwrap();
        assert_eq!(phi.apply(&g.element(vec![1, 3]).unwrap()).unwrap(), 31);
        assert_eq!(phi.invert(31).unwrap().residues(), &[1, 3]);
        let g = GroupSpec::cyclic(9).unwrap();
        let phi = crt_flatten(&g).unwrap();
        for x in 0..9 {
            assert_eq!(phi.apply(&g.element(vec![x]).unwrap()).unwrap(), x);
        }
        assert_eq!(
            crt_flatten(&GroupSpec::new(vec![2, 2]).unwrap()),
            Err(Error::NotCoprime(vec![2, 2]))
        );
    }

    #[test]
    fn crt_is_a_homomorphism() {
        for moduli in [vec![4, 9], vec![2, 3, 5], vec![7, 11], vec![8, 3]] {
            let g = GroupSpec::new(moduli).unwrap();
            let phi = crt_flatten(&g).unwrap();
            let n = g.order();
            let mut images: Vec<u64> = g.elements().map(|e| phi.apply(&e).unwrap()).collect();
            for a in g.elements() {
                for b in g.elements() {
                    let lhs = phi.apply(&g.add(&a, &b).unwrap()).unwrap();
                    let rhs = (phi.apply(&a).unwrap() + phi.apply(&b).unwrap()) % n;
                    assert_eq!(lhs, rhs);
                }
                assert_eq!(phi.invert(phi.apply(&a).unwrap()).unwrap(), a);
            }
            images.sort_unstable();
            assert_eq!(images, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn abelian_groups_of_small_orders() {
        let mods = |n| -> Vec<Vec<u64>> {
            GroupSpec::all_of_order(n)
                .into_iter()
                .map(|g| g.moduli().to_vec())
                .collect()
        };
        assert_eq!(mods(7), vec![vec![7]]);
        assert_eq!(mods(12), vec![vec![2, 6], vec![12]]);
        assert_eq!(mods(8), vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        assert_eq!(
            mods(36),
            vec![vec![2, 18], vec![3, 12], vec![6, 6], vec![36]]
        );
        // number of abelian groups of order 16 is p(4) = 5
        assert_eq!(mods(16).len(), 5);
        assert!(mods(1).is_empty());
    }

    #[test]
    fn json_forms() {
        let s = z(42, &[37, 0, 8, 10, 11, 33]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"modulus":42,"elements":[0,8,10,11,33,37]}"#);
        let back: SidonSequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);

        let g = GroupSpec::new(vec![6, 7]).unwrap();
        let s = SidonSequence::new(
            g.clone(),
            vec![
                g.element(vec![1, 3]).unwrap(),
                g.element(vec![0, 1]).unwrap(),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"moduli":[6,7],"elements":[[0,1],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<SidonSequence>(&json).unwrap(), s);

        let single: SidonSequence =
            serde_json::from_str(r#"{"moduli":[13],"elements":[0,1,3,9]}"#).unwrap();
        assert_eq!(single.residues().unwrap(), vec![0, 1, 3, 9]);
        assert!(serde_json::from_str::<SidonSequence>(r#"{"modulus":5,"elements":[5]}"#).is_err());
        assert!(serde_json::from_str::<SidonSequence>(r#"{"elements":[1]}"#).is_err());
    }
}
