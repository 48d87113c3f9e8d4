//! Words, lattice permutations, tableaux, and the Littlewood–Richardson
//! counts for special double posets.
//!
//! Tableaux are stored bottom row first: `rows[0]` is the longest row,
//! the one holding the entries placed for letter `1` of a lattice word.

use std::fmt;
use std::str::FromStr;

use crate::double_poset::DoublePoset;
use crate::error::{Error, Result};
use crate::perm::{standardize, Permutation, Word};
use crate::qsym::parse_letters_multi;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Cells `(x, y)` of the Ferrers diagram, row `y` holding `parts[y]`
    /// cells, listed row by row from `y = 0`.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| (x, y)))
            .collect()
    }

    /// All partitions of `n`, largest first part first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        Partition::new(parse_letters_multi(s)?)
    }
}

/// A standard Young tableau, bottom row first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks the filling is standard: entries `1..=n` once each, rows
    /// increasing, each row no longer than the one below and increasing
    /// upwards along columns.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = || Error::Precondition("not a standard Young tableau".into());
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (j, row) in rows.iter().enumerate() {
            if row.is_empty() || row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad());
            }
            if j > 0 {
                let below = &rows[j - 1];
                if row.len() > below.len() || row.iter().zip(below).any(|(a, b)| a <= b) {
                    return Err(bad());
                }
            }
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return Err(bad());
                }
                seen[v] = true;
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// Every prefix has at least as many `i`s as `(i+1)`s.
pub fn is_lattice(w: &Word) -> bool {
    let mut counts = vec![0usize; w.max_letter() + 2];
    for &a in w.letters() {
        counts[a] += 1;
        if a > 1 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

/// Exchanges `i` and `k + 1 - i`, `k` the largest letter.
pub fn complement(w: &Word) -> Word {
    let k = w.max_letter();
    Word::new(w.letters().iter().map(|&a| k + 1 - a).collect()).expect("letters stay positive")
}

pub fn mirror(w: &Word) -> Word {
    Word::new(w.letters().iter().rev().copied().collect()).expect("letters stay positive")
}

/// Letter multiplicities `(n₁, n₂, …)`, which must form a partition.
pub fn weight(w: &Word) -> Result<Partition> {
    let mut counts = vec![0usize; w.max_letter()];
    for &a in w.letters() {
        counts[a - 1] += 1;
    }
    if counts.contains(&0) || counts.windows(2).any(|c| c[0] < c[1]) {
        return Err(Error::NotAPartition(counts));
    }
    Ok(Partition(counts))
}

/// `w` fits into the special double poset `d`: `e ↦ w[ω(e)]` is a
/// π-partition, `ω` the labelling.
pub fn fits_into(w: &Word, d: &DoublePoset) -> Result<bool> {
    let omega = d.labelling()?;
    if w.len() != d.n() {
        return Err(Error::LengthMismatch {
            expected: d.n(),
            actual: w.len(),
        });
    }
    let x: Vec<usize> = omega.iter().map(|&label| w.letters()[label - 1]).collect();
    Ok(d.is_pi_partition(&x))
}

/// All lattice permutations of weight `nu`, in lexicographic order.
pub fn lattice_words(nu: &Partition) -> Vec<Word> {
    fn rec(nu: &[usize], counts: &mut [usize], cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if cur.len() == nu.iter().sum::<usize>() {
            out.push(Word::new(cur.clone()).expect("letters are positive"));
            return;
        }
        for i in 0..nu.len() {
            if counts[i] < nu[i] && (i == 0 || counts[i - 1] > counts[i]) {
                counts[i] += 1;
                cur.push(i + 1);
                rec(nu, counts, cur, out);
                cur.pop();
                counts[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&nu.0, &mut vec![0; nu.len()], &mut Vec::new(), &mut out);
    out
}

/// Position `p` goes to row `j` when the `p`-th letter of `w` is `j`.
pub fn tableau_from_lattice(w: &Word) -> Result<Tableau> {
    if !is_lattice(w) {
        return Err(Error::NotLattice);
    }
    let mut rows = vec![Vec::new(); w.max_letter()];
    for (p, &a) in w.letters().iter().enumerate() {
        rows[a - 1].push(p + 1);
    }
    Tableau::new(rows)
}

/// Rows concatenated from the last (top) row down to the first.
pub fn read_word(t: &Tableau) -> Permutation {
    Permutation::new(t.rows.iter().rev().flatten().copied().collect())
        .expect("a standard tableau holds each of 1..=n once")
}

/// Rows concatenated from the first (bottom) row up.
pub fn row_word(t: &Tableau) -> Permutation {
    Permutation::new(t.rows.iter().flatten().copied().collect())
        .expect("a standard tableau holds each of 1..=n once")
}

pub fn mirror_read_word(t: &Tableau) -> Permutation {
    let mut v = read_word(t).as_slice().to_vec();
    v.reverse();
    Permutation::new(v).expect("reversal keeps a permutation")
}

/// Complement of a permutation word: `i ↦ n + 1 - i`.
pub fn complement_permutation(s: &Permutation) -> Permutation {
    Permutation::longest(s.len())
        .compose(s)
        .expect("same length")
}

/// Longest element of the Young subgroup `S_{ν₁} × … × S_{ν_k}`: each block
/// of consecutive values reversed.
pub fn young_longest(nu: &Partition) -> Permutation {
    let mut out = Vec::with_capacity(nu.weight());
    let mut offset = 0;
    for &p in nu.parts() {
        out.extend((offset + 1..=offset + p).rev());
        offset += p;
    }
    Permutation::new(out).expect("blocks cover 1..=n")
}

/// Outcome of checking the standardization identities for a lattice word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StIdentityReport {
    /// `st(complement(w)) = w₀ ∘ γ ∘ st(w)`.
    pub complement: bool,
    /// `st(mirror(w)) = γ ∘ st(w) ∘ w₀`.
    pub mirror: bool,
    /// `st(w) = row(T)⁻¹`.
    pub row_inverse: bool,
}

impl StIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.complement && self.mirror && self.row_inverse
    }
}

/// Checks the three standardization identities for a lattice word whose
/// weight has strictly decreasing parts.
pub fn st_identities_check(w: &Word) -> Result<StIdentityReport> {
    tableau_from_lattice(w)?;
    let nu = weight(w)?;
    if !nu.is_strict() {
        return Err(Error::Precondition(format!(
            "weight {nu} does not have strictly decreasing parts"
        )));
    }
    let n = w.len();
    let st_w = standardize(w.letters());
    let w0 = Permutation::longest(n);
    let gamma = young_longest(&nu);
    let compose = |a: &Permutation, b: &Permutation| a.compose(b).expect("same length");
    Ok(StIdentityReport {
        complement: standardize(complement(w).letters()) == compose(&w0, &compose(&gamma, &st_w)),
        mirror: standardize(mirror(w).letters()) == compose(&compose(&gamma, &st_w), &w0),
        row_inverse: row_word_identity(w)?,
    })
}

/// `st(w) = row(T)⁻¹` for a lattice word `w` of any weight.
pub fn row_word_identity(w: &Word) -> Result<bool> {
    let tableau = tableau_from_lattice(w)?;
    Ok(standardize(w.letters()) == row_word(&tableau).inverse())
}

/// The reading-word identities for a lattice word `w` with tableau `T`:
/// `read(T) = st(complement(w))⁻¹`, and `mirror_read(T)` equals the
/// complement of `st(mirror(w))⁻¹`.
pub fn reading_word_identities(w: &Word) -> Result<(bool, bool)> {
    let t = tableau_from_lattice(w)?;
    let first = read_word(&t) == standardize(complement(w).letters()).inverse();
    let second = mirror_read_word(&t)
        == complement_permutation(&standardize(mirror(w).letters()).inverse());
    Ok((first, second))
}

fn check_lr_args(d: &DoublePoset, nu: &Partition) -> Result<()> {
    if !d.is_special() {
        return Err(Error::NotSpecial);
    }
    if d.n() != nu.weight() {
        return Err(Error::SizeMismatch {
            poset: d.n(),
            partition: nu.weight(),
        });
    }
    Ok(())
}

/// Lattice permutations of weight `nu` whose complements fit into `d`.
pub fn lr_count_complement(d: &DoublePoset, nu: &Partition) -> Result<u64> {
    check_lr_args(d, nu)?;
    let mut count = 0;
    for w in lattice_words(nu) {
        if fits_into(&complement(&w), d)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Lattice permutations of weight `nu` whose mirror images fit into the
/// tilde of `d`.
pub fn lr_count_mirror(d: &DoublePoset, nu: &Partition) -> Result<u64> {
    check_lr_args(d, nu)?;
    let t = d.tilde();
    let mut count = 0;
    for w in lattice_words(nu) {
        if fits_into(&mirror(&w), &t)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `(w fits into d, st(w) fits into d)`; the two always agree.
pub fn fits_standardization_check(w: &Word, d: &DoublePoset) -> Result<(bool, bool)> {
    let direct = fits_into(w, d)?;
    let standardized = fits_into(&standardize(w.letters()).to_word(), d)?;
    Ok((direct, standardized))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> DoublePoset {
        DoublePoset::from_permutation(&perm(s))
    }

    const W: &str = "1 2 3 1 4 2 1 1 3 2 2";

    #[test]
    fn lattice_examples() {
        assert!(is_lattice(&word("11122132")));
        assert!(!is_lattice(&word("21")));
        assert!(is_lattice(&word("()")));
        assert!(is_lattice(&word(W)));
    }

    #[test]
    fn complement_mirror_weight() {
        assert_eq!(complement(&word("11122132")), word("33322312"));
        assert_eq!(weight(&word("11122132")).unwrap(), part("4,3,1"));
        assert_eq!(mirror(&word(W)), word("2 2 3 1 1 2 4 1 3 2 1"));
        assert_eq!(weight(&word("122")), Err(Error::NotAPartition(vec![1, 2])));
        assert_eq!(weight(&word("13")), Err(Error::NotAPartition(vec![1, 0, 1])));
        assert_eq!(weight(&word("()")).unwrap(), part("()"));
    }

    #[test]
    fn fits_examples() {
        assert!(fits_into(&word("11"), &p("12")).unwrap());
        assert!(!fits_into(&word("11"), &p("21")).unwrap());
        assert!(fits_into(&word("12"), &p("12")).unwrap());
        assert_eq!(fits_into(&word("1"), &p("12")), Err(Error::LengthMismatch { expected: 2, actual: 1 }));
        assert_eq!(fits_into(&word("11"), &DoublePoset::antichain(2)), Err(Error::NotSpecial));
    }

    #[test]
    fn lattice_word_lists() {
        assert_eq!(lattice_words(&part("2,1")), vec![word("112"), word("121")]);
        assert_eq!(lattice_words(&part("4")), vec![word("1111")]);
        assert_eq!(lattice_words(&part("1,1,1")), vec![word("123")]);
        assert_eq!(lattice_words(&part("()")), vec![word("()")]);
    }

    #[test]
    fn tableau_machinery() {
        let t = tableau_from_lattice(&word(W)).unwrap();
        assert_eq!(
            t.rows(),
            &[vec![1, 4, 7, 8], vec![2, 6, 10, 11], vec![3, 9], vec![5]]
        );
        assert_eq!(row_word(&t), perm("1 4 7 8 2 6 10 11 3 9 5"));
        assert_eq!(read_word(&t), perm("5 3 9 2 6 10 11 1 4 7 8"));
        assert_eq!(mirror_read_word(&t), perm("8 7 4 1 11 10 6 2 9 3 5"));
        assert_eq!(t.shape(), weight(&word(W)).unwrap());
        assert_eq!(tableau_from_lattice(&word("21")), Err(Error::NotLattice));
    }

    #[test]
    fn word_chain_values() {
        let w = word(W);
        assert_eq!(standardize(complement(&w).letters()), perm("8 4 2 9 1 5 10 11 3 6 7"));
        let st_v = standardize(mirror(&w).letters());
        assert_eq!(st_v, perm("5 6 9 1 2 7 11 3 10 8 4"));
        assert_eq!(st_v.inverse(), perm("4 5 8 11 1 2 6 10 3 9 7"));
        assert_eq!(complement_permutation(&st_v.inverse()), perm("8 7 4 1 11 10 6 2 9 3 5"));
        assert_eq!(
            standardize(complement(&w).letters()).inverse(),
            perm("5 3 9 2 6 10 11 1 4 7 8")
        );
        assert_eq!(reading_word_identities(&w).unwrap(), (true, true));
        assert!(row_word_identity(&w).unwrap());
    }

    #[test]
    fn st_identity_gating() {
        assert!(matches!(st_identities_check(&word(W)), Err(Error::Precondition(_))));
        assert_eq!(st_identities_check(&word("21")), Err(Error::NotLattice));
        let report = st_identities_check(&word("112")).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn young_longest_blocks() {
        assert_eq!(young_longest(&part("3,2,1")), perm("321546"));
        assert_eq!(young_longest(&part("2,1")), perm("213"));
    }

    #[test]
    fn lr_count_examples() {
        let pi = |s: &str| DoublePoset::pi_from_partition(&part(s));
        assert_eq!(lr_count_complement(&pi("2"), &part("2")).unwrap(), 1);
        assert_eq!(lr_count_complement(&pi("2"), &part("1,1")).unwrap(), 0);
        assert_eq!(lr_count_mirror(&pi("2"), &part("2")).unwrap(), 1);
        assert_eq!(lr_count_mirror(&pi("2"), &part("1,1")).unwrap(), 0);
        let d = pi("1").compose(&pi("1"));
        for nu in ["2", "1,1"] {
            assert_eq!(lr_count_complement(&d, &part(nu)).unwrap(), 1);
            assert_eq!(lr_count_mirror(&d, &part(nu)).unwrap(), 1);
        }
        assert_eq!(lr_count_complement(&pi("1"), &part("1")).unwrap(), 1);
        assert!(matches!(lr_count_complement(&pi("1"), &part("2")), Err(Error::SizeMismatch { .. })));
        assert_eq!(
            lr_count_mirror(&DoublePoset::antichain(1), &part("1")).unwrap(),
            1
        );
        assert_eq!(
            lr_count_mirror(&DoublePoset::antichain(2), &part("2")),
            Err(Error::NotSpecial)
        );
    }

    #[test]
    fn standardization_fit_examples() {
        assert_eq!(fits_standardization_check(&word("11"), &p("12")).unwrap(), (true, true));
        assert_eq!(fits_standardization_check(&word("11"), &p("21")).unwrap(), (false, false));
        for n in 0..=3 {
            let words: Vec<Vec<usize>> = (0..(1usize << n))
                .map(|m| (0..n).map(|i| 1 + ((m >> i) & 1)).collect())
                .collect();
            for s in Permutation::all(n) {
                let d = p(s.as_slice().iter().map(|v| v.to_string()).collect::<String>().as_str());
                for w in &words {
                    let (a, b) = fits_standardization_check(&Word::new(w.clone()).unwrap(), &d).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![part("()")]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!(part("3,1").is_strict() && !part("2,2").is_strict());
        assert_eq!(part("3,1").to_string(), "(3,1)");
    }
}
