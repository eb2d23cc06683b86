//! Sidon constructions and the optimality oracle.
//!
//! * [`construct_power_pairs`]: `{(i, α^i) : 0 <= i <= q-2}` over `Z_{q-1} x GF(q)`,
//!   with `q - 1` elements in a group of order `q(q-1)`.
//! * [`construct_ruzsa`]: the same set for prime `q = p`, flattened to
//!   `Z_{p(p-1)}` by the Chinese remainder map.
//! * [`construct_bose`]: `q` elements in `Z_{q^2-1}`.
//! * [`construct_singer`]: a perfect difference set of `q + 1` elements in
//!   `Z_{q^2+q+1}`.
//!
//! Bose and Singer sets depend on the chosen primitive element and base
//! point; outputs are unique only up to translation and multiplication by
//! units. We always use the field's canonical primitive element `β`, the
//! coset `β + GF(q)` for Bose and the span of `{1, β}` for Singer.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::group::{crt_flatten, GroupElement, GroupSpec, SidonSequence};
use crate::search::{self, DifferenceTable};

pub use crate::search::counting_bound;

/// Largest group order [`max_sidon_size`] searches by default.
pub const SEARCH_CAP: u64 = 60;

/// Largest order for which [`check_optimality`] searches every abelian group.
pub const ALL_GROUPS_CAP: u64 = 40;

/// `A_{q,α} = {(i, α^i)}` over `Z_{q-1} x Z_p^k`.
///
/// The second coordinate is the coefficient vector of `α^i`.
pub fn construct_power_pairs(field: &Field, alpha: &FieldElement) -> Result<SidonSequence> {
    let q = field.order();
    if q < 3 {
        return Err(Error::OutOfRange(format!(
            "the pair construction needs q >= 3, got {q}"
        )));
    }
    if !field.is_primitive(alpha)? {
        return Err(Error::NotPrimitive(alpha.coeffs().to_vec()));
    }
    let mut moduli = vec![q - 1];
    moduli.extend(std::iter::repeat_n(
        field.characteristic(),
        field.degree() as usize,
    ));
    let group = GroupSpec::new(moduli)?;
    let mut power = field.one();
    let mut elements = Vec::with_capacity((q - 1) as usize);
    for i in 0..q - 1 {
        let mut residues = vec![i];
        residues.extend_from_slice(power.coeffs());
        elements.push(group.element(residues)?);
        power = field.mul(&power, alpha)?;
    }
    SidonSequence::new(group, elements)
}

/// The pair construction for a prime, flattened into `Z_{p^2 - p}`.
pub fn construct_ruzsa(p: u64) -> Result<SidonSequence> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 3 {
        return Err(Error::OutOfRange(format!("need a prime p >= 3, got {p}")));
    }
    let field = Field::new(p, 1)?;
    let pairs = construct_power_pairs(&field, &field.primitive())?;
    crt_flatten(pairs.group())?.map_sequence(&pairs)
}

/// GF(q^degree) for a prime power `q`.
fn extension_of(q: u64, degree: u32) -> Result<Field> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Field::new(p, k * degree)
}

/// Encoded values of the copy of GF(q) inside a degree-`degree` extension:
/// zero and the powers of `β^((q^degree - 1)/(q - 1))`.
fn subfield(big: &Field, q: u64) -> Vec<u32> {
    let step = (big.order() - 1) / (q - 1);
    let mut out = vec![0u32];
    out.extend((0..q - 1).map(|j| big.exp_raw(j * step)));
    out
}

/// `{log_β(β + c) : c ∈ GF(q)}` in `Z_{q^2-1}`, `β` primitive in GF(q^2).
pub fn construct_bose(q: u64) -> Result<SidonSequence> {
    let big = extension_of(q, 2)?;
    let beta = big.exp_raw(1);
    let residues: Vec<u64> = subfield(&big, q)
        .into_iter()
        .map(|c| big.log_raw(big.add_raw(beta, c)))
        .collect();
    SidonSequence::cyclic(q * q - 1, &residues)
}

/// `{a mod (q^2+q+1) : β^a ∈ span{1, β} \ {0}}`, `β` primitive in GF(q^3).
pub fn construct_singer(q: u64) -> Result<SidonSequence> {
    let big = extension_of(q, 3)?;
    let n = q * q + q + 1;
    let beta = big.exp_raw(1);
    let scalars = subfield(&big, q);
    let mut residues = BTreeSet::new();
    for &c0 in &scalars {
        for &c1 in &scalars {
            let v = big.add_raw(c0, big.mul_raw(c1, beta));
            if v != 0 {
                residues.insert(big.log_raw(v) % n);
            }
        }
    }
    debug_assert_eq!(residues.len() as u64, q + 1);
    SidonSequence::cyclic(n, &residues.into_iter().collect::<Vec<_>>())
}

/// Maximum Sidon set of a group together with the witness found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub max: usize,
    pub witness: SidonSequence,
}

/// Exact maximum Sidon set size of `g` with the default cap.
pub fn max_sidon_size(g: &GroupSpec) -> Result<SearchResult> {
    max_sidon_size_with_cap(g, SEARCH_CAP)
}

/// Exact maximum by backtracking; the witness is the lexicographically
/// smallest maximum set containing the identity.
pub fn max_sidon_size_with_cap(g: &GroupSpec, cap: u64) -> Result<SearchResult> {
    let n = g.order();
    if n > cap {
        return Err(Error::SearchCapExceeded { size: n, cap });
    }
    let table = DifferenceTable::new(n as usize, |a, b| {
        let d = g
            .sub(&g.element_at(a as u64), &g.element_at(b as u64))
            .expect("indices are in range");
        g.index_of(&d).expect("difference is in the group") as usize
    });
    let witness: Vec<GroupElement> = search::max_sidon(&table)
        .into_iter()
        .map(|i| g.element_at(i as u64))
        .collect();
    Ok(SearchResult {
        max: witness.len(),
        witness: SidonSequence::new(g.clone(), witness)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The size meets the counting bound `m(m-1) <= n-1`.
    OptimalByBound,
    /// Exhaustive search over every abelian group of the same order found
    /// nothing larger.
    Optimal,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityReport {
    pub group_order: u64,
    pub size: usize,
    pub upper_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force_max: Option<usize>,
    pub verdict: Verdict,
}

/// Compares `s` against the counting bound and, for orders up to
/// [`ALL_GROUPS_CAP`], against the exact maximum over every abelian group of
/// that order. The bound takes precedence in the verdict.
pub fn check_optimality(s: &SidonSequence) -> OptimalityReport {
    check_optimality_with_cap(s, ALL_GROUPS_CAP)
}

pub fn check_optimality_with_cap(s: &SidonSequence, cap: u64) -> OptimalityReport {
    let n = s.group().order();
    let size = s.len();
    let upper_bound = counting_bound(n);
    let brute_force_max = (n <= cap).then(|| {
        GroupSpec::all_of_order(n)
            .iter()
            .map(|g| {
                max_sidon_size_with_cap(g, cap)
                    .expect("order is within the cap")
                    .max
            })
            .max()
            .unwrap_or(1)
    });
    let verdict = if size == upper_bound {
        Verdict::OptimalByBound
    } else if brute_force_max.is_some_and(|best| best <= size) {
        Verdict::Optimal
    } else {
        Verdict::Unknown
    };
    OptimalityReport {
        group_order: n,
        size,
        upper_bound,
        brute_force_max,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(s: &SidonSequence) -> Vec<Vec<u64>> {
        s.elements().iter().map(|e| e.residues().to_vec()).collect()
    }

    #[test]
    fn power_pairs_q7() {
        let f = Field::new(7, 1).unwrap();
        let s = construct_power_pairs(&f, &f.element(vec![3]).unwrap()).unwrap();
        assert_eq!(s.group().moduli(), &[6, 7]);
        assert_eq!(
            pairs(&s),
            vec![
                vec![0, 1],
                vec![1, 3],
                vec![2, 2],
                vec![3, 6],
                vec![4, 4],
                vec![5, 5]
            ]
        );
        assert!(s.verify_sidon().is_ok());
    }

    #[test]
    fn power_pairs_q3_and_q4() {
        let f = Field::new(3, 1).unwrap();
        let s = construct_power_pairs(&f, &f.element(vec![2]).unwrap()).unwrap();
        assert_eq!(pairs(&s), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(s.group().moduli(), &[2, 3]);

        let f = Field::new(2, 2).unwrap();
        let omega = f.element(vec![0, 1]).unwrap();
        let s = construct_power_pairs(&f, &omega).unwrap();
        assert_eq!(s.group().moduli(), &[3, 2, 2]);
        assert_eq!(pairs(&s), vec![vec![0, 1, 0], vec![1, 0, 1], vec![2, 1, 1]]);
        assert!(s.verify_sidon().is_ok());
    }

    #[test]
    fn power_pairs_rejects_non_primitive() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(
            construct_power_pairs(&f, &f.element(vec![2]).unwrap()),
            Err(Error::NotPrimitive(vec![2]))
        );
        let f = Field::new(2, 1).unwrap();
        assert!(construct_power_pairs(&f, &f.one()).is_err());
    }

    #[test]
    fn ruzsa_examples() {
        assert_eq!(
            construct_ruzsa(7).unwrap().residues().unwrap(),
            vec![2, 4, 5, 27, 31, 36]
        );
        assert_eq!(construct_ruzsa(3).unwrap().residues().unwrap(), vec![4, 5]);
        assert_eq!(construct_ruzsa(9), Err(Error::NotPrime(9)));
        assert!(construct_ruzsa(2).is_err());
    }

    #[test]
    fn bose_examples() {
        let s = construct_bose(3).unwrap();
        assert_eq!(s.group().moduli(), &[8]);
        assert_eq!(s.residues().unwrap(), vec![1, 6, 7]);
        let s = construct_bose(2).unwrap();
        assert_eq!((s.len(), s.group().order()), (2, 3));
        let s = construct_bose(4).unwrap();
        assert_eq!((s.len(), s.group().order()), (4, 15));
        assert!(s.verify_sidon().is_ok());
        assert_eq!(construct_bose(6), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn singer_examples() {
        let s = construct_singer(2).unwrap();
        assert_eq!(s.residues().unwrap(), vec![0, 1, 3]);
        let s = construct_singer(3).unwrap();
        assert_eq!((s.len(), s.group().order()), (4, 13));
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let s = construct_singer(q).unwrap();
            let counts = s.difference_counts();
            assert_eq!(counts[0], 0);
            assert!(counts[1..].iter().all(|&c| c == 1), "q = {q}");
        }
    }

    #[test]
    fn every_construction_is_sidon_up_to_32() {
        for q in 2..=32u64 {
            let Some((p, _)) = prime_power(q) else {
                continue;
            };
            let bose = construct_bose(q).unwrap();
            assert_eq!(bose.len() as u64, q);
            assert!(bose.verify_sidon().is_ok(), "Bose q = {q}");
            let singer = construct_singer(q).unwrap();
            assert_eq!(singer.len() as u64, q + 1);
            assert!(singer.verify_sidon().is_ok(), "Singer q = {q}");
            if q >= 3 {
                let f = Field::of_order(q).unwrap();
                let s = construct_power_pairs(&f, &f.primitive()).unwrap();
                assert_eq!(s.len() as u64, q - 1);
                assert!(s.verify_sidon().is_ok(), "pairs q = {q}");
            }
            if q == p && q >= 3 {
                assert!(construct_ruzsa(p).unwrap().verify_sidon().is_ok());
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let z = |n| GroupSpec::cyclic(n).unwrap();
        let r = max_sidon_size(&z(7)).unwrap();
        assert_eq!(r.max, 3);
        assert_eq!(r.witness.residues().unwrap(), vec![0, 1, 3]);
        assert_eq!(max_sidon_size(&z(6)).unwrap().max, 2);
        assert_eq!(max_sidon_size(&z(2)).unwrap().max, 1);
        assert_eq!(max_sidon_size(&z(5)).unwrap().max, 2);
        assert_eq!(
            max_sidon_size(&z(61)),
            Err(Error::SearchCapExceeded { size: 61, cap: 60 })
        );
    }

    #[test]
    fn oracle_monotone_under_direct_factors() {
        for a in 2..=8u64 {
            let base = max_sidon_size(&GroupSpec::cyclic(a).unwrap()).unwrap().max;
            for b in 2..=5u64 {
                let ext = GroupSpec::new(vec![a, b]).unwrap();
                let got = max_sidon_size(&ext).unwrap();
                assert!(got.max >= base, "Z_{a} x Z_{b}");
                assert!(got.witness.verify_sidon().is_ok());
            }
        }
    }

    #[test]
    fn optimality_reports() {
        let f = Field::new(2, 2).unwrap();
        let s = construct_power_pairs(&f, &f.primitive()).unwrap();
        let r = check_optimality(&s);
        assert_eq!((r.group_order, r.size, r.upper_bound), (12, 3, 3));
        assert_eq!(r.verdict, Verdict::OptimalByBound);
        assert_eq!(r.brute_force_max, Some(3));

        let f = Field::new(7, 1).unwrap();
        let s = construct_power_pairs(&f, &f.primitive()).unwrap();
        let r = check_optimality(&s);
        assert_eq!((r.group_order, r.size, r.upper_bound), (42, 6, 6));
        assert_eq!(r.verdict, Verdict::OptimalByBound);
        assert_eq!(r.brute_force_max, None);

        let s = SidonSequence::cyclic(5, &[0, 1]).unwrap();
        let r = check_optimality(&s);
        assert_eq!(r.upper_bound, 2);
        assert_eq!(r.brute_force_max, Some(2));
        assert_eq!(r.verdict, Verdict::OptimalByBound);

        // a pair in a group of order 8, where triples exist
        let s = SidonSequence::cyclic(8, &[0, 1]).unwrap();
        let r = check_optimality(&s);
        assert_eq!(r.upper_bound, 3);
        assert_eq!(r.brute_force_max, Some(3));
        assert_eq!(r.verdict, Verdict::Unknown);
    }

    #[test]
    fn optimal_without_meeting_the_bound() {
        // order 22 allows 5 by counting, but Z_22 (the only group of that
        // order) has no Sidon set of size 5
        let found = max_sidon_size(&GroupSpec::cyclic(22).unwrap()).unwrap();
        assert_eq!(found.max, 4);
        let r = check_optimality(&found.witness);
        assert_eq!(r.upper_bound, 5);
        assert_eq!(r.brute_force_max, Some(4));
        assert_eq!(r.verdict, Verdict::Optimal);
    }

    #[test]
    fn report_json() {
        let s = SidonSequence::cyclic(7, &[0, 1, 3]).unwrap();
        let json = serde_json::to_string(&check_optimality(&s)).unwrap();
        assert_eq!(
            json,
            r#"{"group_order":7,"size":3,"upper_bound":3,"brute_force_max":3,"verdict":"optimal-by-bound"}"#
        );
    }
}
