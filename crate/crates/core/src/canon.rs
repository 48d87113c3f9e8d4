//! Canonical labelling of double posets.
//!
//! The key of a double poset is the lexicographically least incidence
//! encoding over all relabellings of its ground set. Relabellings are
//! searched depth first, growing the relabelled prefix one element at a
//! time; the encoding is laid out so that a prefix of the relabelling fixes
//! a prefix of the key, which lets every branch whose partial key already
//! exceeds the best one be cut.
//!
//! Encoding: after the element count, for each new position `k` and each
//! earlier position `j < k`, four bits `k <₁ j`, `j <₁ k`, `k <₂ j`,
//! `j <₂ k`, packed most-significant-bit first.

use std::cmp::Ordering;
use std::fmt;

use crate::double_poset::DoublePoset;
use crate::error::{Error, Result};
use crate::poset::Relation;

/// Largest ground set accepted by [`canonicalize`].
pub const CANON_CAP: usize = 10;

/// Isomorphism-class key of a double poset.
///
/// Ordered by grade first, then by key bytes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: Vec<u8>,
}

fn bit_count(n: usize) -> usize {
    2 * n * n.saturating_sub(1)
}

impl CanonicalForm {
    /// Class of the empty double poset, the unit of the algebra.
    pub fn empty() -> Self {
        CanonicalForm {
            n: 0,
            bits: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Full key: the grade byte followed by the packed incidence bits.
    pub fn key_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.bits.len());
        out.push(self.n);
        out.extend_from_slice(&self.bits);
        out
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.key_bytes())
    }

    pub fn from_key_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            column: 1,
            message: message.to_string(),
        };
        let (&n, bits) = bytes.split_first().ok_or_else(|| bad("empty key"))?;
        if n as usize > CANON_CAP {
            return Err(Error::SizeCap {
                what: "canonical key",
                size: n as usize,
                cap: CANON_CAP,
            });
        }
        if bits.len() != bit_count(n as usize).div_ceil(8) {
            return Err(bad("key length does not match its grade"));
        }
        let form = CanonicalForm {
            n,
            bits: bits.to_vec(),
        };
        // Only keys that are their own canonical form are accepted.
        let d = form.decode()?;
        if canonicalize(&d)?.0 != form {
            return Err(bad("key is not in canonical form"));
        }
        Ok(form)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid hex key: {e}"),
        })?;
        Self::from_key_bytes(&bytes)
    }

    fn bit(&self, b: usize) -> bool {
        self.bits[b / 8] & (0x80 >> (b % 8)) != 0
    }

    fn decode(&self) -> Result<DoublePoset> {
        let n = self.n();
        let mut r1 = vec![0u32; n];
        let mut r2 = vec![0u32; n];
        let mut b = 0;
        for k in 1..n {
            for j in 0..k {
                if self.bit(b) {
                    r1[k] |= 1 << j;
                }
                if self.bit(b + 1) {
                    r1[j] |= 1 << k;
                }
                if self.bit(b + 2) {
                    r2[k] |= 1 << j;
                }
                if self.bit(b + 3) {
                    r2[j] |= 1 << k;
                }
                b += 4;
            }
        }
        DoublePoset::new(Relation::from_masks(r1)?, Relation::from_masks(r2)?)
    }

    /// The representative double poset carried by this key.
    pub fn double_poset(&self) -> DoublePoset {
        self.decode()
            .expect("canonical forms are only built from valid double posets")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

struct Search<'a> {
    r1: &'a Relation,
    r2: &'a Relation,
    n: usize,
    /// `order[k]` is the original element placed at canonical position `k`.
    order: Vec<usize>,
    used: u32,
    current: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn write_chunk(&mut self, k: usize, a: usize) {
        let start = 2 * k * k.saturating_sub(1);
        for j in 0..k {
            let b = self.order[j];
            let off = start + 4 * j;
            self.current[off] = self.r1.less(a, b);
            self.current[off + 1] = self.r1.less(b, a);
            self.current[off + 2] = self.r2.less(a, b);
            self.current[off + 3] = self.r2.less(b, a);
        }
    }

    /// `tied` means the current prefix equals the best key's prefix.
    /// Returns whether the best key was replaced within this subtree.
    fn run(&mut self, k: usize, tied: bool) -> bool {
        if k == self.n {
            if self.best.is_none() || !tied {
                self.best = Some((self.current.clone(), self.order.clone()));
                return true;
            }
            return false;
        }
        let start = 2 * k * k.saturating_sub(1);
        let end = start + 4 * k;
        let mut tied_here = tied;
        let mut updated = false;
        for a in 0..self.n {
            if self.used & (1 << a) != 0 {
                continue;
            }
            self.order.push(a);
            self.write_chunk(k, a);
            let child_tied = match &self.best {
                None => Some(false),
                Some(_) if !tied_here => Some(false),
                Some((best, _)) => match self.current[start..end].cmp(&best[start..end]) {
                    Ordering::Less => Some(false),
                    Ordering::Equal => Some(true),
                    Ordering::Greater => None,
                },
            };
            if let Some(child_tied) = child_tied {
                self.used |= 1 << a;
                if self.run(k + 1, child_tied) {
                    updated = true;
                    tied_here = true;
                }
                self.used &= !(1 << a);
            }
            self.order.pop();
        }
        updated
    }
}

/// Canonical key of `d` and a witness relabelling: element `i` of `d` sits
/// at position `relabel[i]` of the canonical representative.
pub fn canonicalize(d: &DoublePoset) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = d.n();
    if n > CANON_CAP {
        return Err(Error::SizeCap {
            what: "canonicalization",
            size: n,
            cap: CANON_CAP,
        });
    }
    let mut search = Search {
        r1: d.first(),
        r2: d.second(),
        n,
        order: Vec::with_capacity(n),
        used: 0,
        current: vec![false; bit_count(n)],
        best: None,
    };
    search.run(0, false);
    let (bits, order) = search.best.expect("at least one relabelling exists");
    let mut packed = vec![0u8; bits.len().div_ceil(8)];
    for (b, &set) in bits.iter().enumerate() {
        if set {
            packed[b / 8] |= 0x80 >> (b % 8);
        }
    }
    let mut relabel = vec![0; n];
    for (k, &orig) in order.iter().enumerate() {
        relabel[orig] = k;
    }
    Ok((
        CanonicalForm {
            n: n as u8,
            bits: packed,
        },
        relabel,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(word: &[usize]) -> DoublePoset {
        DoublePoset::from_permutation(&Permutation::new(word.to_vec()).unwrap())
    }

    #[test]
    fn point_has_fixed_key() {
        let (key, relabel) = canonicalize(&DoublePoset::point()).unwrap();
        assert_eq!(key.to_hex(), "01");
        assert_eq!(relabel, vec![0]);
        assert_eq!(canonicalize(&DoublePoset::empty()).unwrap().0.to_hex(), "00");
    }

    #[test]
    fn relabelled_chains_agree() {
        let a = DoublePoset::new(Relation::natural(2), Relation::antichain(2)).unwrap();
        let b = DoublePoset::new(Relation::chain(&[1, 0]).unwrap(), Relation::antichain(2)).unwrap();
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    }

    #[test]
    fn p12_and_p21_differ() {
        assert_ne!(
            p(&[1, 2]).canonical_form().unwrap(),
            p(&[2, 1]).canonical_form().unwrap()
        );
    }

    #[test]
    fn witness_maps_onto_representative() {
        let d = DoublePoset::from_pairs(4, &[(2, 0), (3, 1)], &[(1, 0), (0, 3)]).unwrap();
        let (key, relabel) = canonicalize(&d).unwrap();
        assert_eq!(d.relabel(&relabel), key.double_poset());
    }

    #[test]
    fn hex_round_trip_and_rejection() {
        let key = p(&[2, 3, 1]).canonical_form().unwrap();
        assert_eq!(CanonicalForm::from_hex(&key.to_hex()).unwrap(), key);
        assert!(CanonicalForm::from_hex("zz").is_err());
        assert!(CanonicalForm::from_hex("0280").is_err());
        assert!(CanonicalForm::from_hex("0b").is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let d = DoublePoset::new(Relation::antichain(11), Relation::antichain(11)).unwrap();
        assert!(matches!(canonicalize(&d), Err(Error::SizeCap { .. })));
    }
}
