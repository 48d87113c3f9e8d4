//! Verification suites.
//!
//! Each suite checks a family of identities over every canonical double
//! poset up to a degree bound. Degrees up to [`EXHAUSTIVE_MAX`] (special
//! ones up to [`SPECIAL_EXHAUSTIVE_MAX`]) are enumerated completely; above
//! that a seeded random sample stands in. Results are counted per property
//! and never depend on anything but the bounds and the seed.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self, Antipode, DElement, DTensor};
use crate::canon::CanonicalForm;
use crate::double_poset::{self, DoublePoset};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::lr::{self, Partition};
use crate::perm::{self, Permutation, SElement, STensor, Word};
use crate::poset::{self, Relation};
use crate::qsym::{self, Composition, QElement, QTensor};

/// Largest degree whose double posets are enumerated exhaustively.
pub const EXHAUSTIVE_MAX: usize = 4;
/// Largest degree whose special double posets are enumerated exhaustively.
pub const SPECIAL_EXHAUSTIVE_MAX: usize = 5;
/// Largest `max_n` accepted by [`run`].
pub const CHECK_MAX_N: usize = 6;
/// Number of distinct classes drawn per sampled degree.
pub const SAMPLE_SIZE: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Hopf,
    SelfDual,
    Internal,
    Lmap,
    Qsym,
    Lr,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["hopf", "selfdual", "internal", "lmap", "qsym", "lr", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::SelfDual => "selfdual",
            Suite::Internal => "internal",
            Suite::Lmap => "lmap",
            Suite::Qsym => "qsym",
            Suite::Lr => "lr",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "hopf" => Suite::Hopf,
            "selfdual" => Suite::SelfDual,
            "internal" => Suite::Internal,
            "lmap" => Suite::Lmap,
            "qsym" => Suite::Qsym,
            "lr" => Suite::Lr,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Case and failure counts of one property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
}

impl PropertyResult {
    fn new(suite: &'static str, name: &'static str) -> Self {
        Self {
            suite,
            name,
            cases: 0,
            failures: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, suite: &str, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.suite == suite && p.name == name)
    }

    fn extend(&mut self, other: Report) {
        self.properties.extend(other.properties);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .properties
            .iter()
            .map(|p| p.suite.len() + p.name.len() + 1)
            .max()
            .unwrap_or(0);
        for p in &self.properties {
            let label = format!("{}.{}", p.suite, p.name);
            let status = if p.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{label:<width$}  {status}  cases={} failures={}", p.cases, p.failures)?;
        }
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        if failed == 0 {
            write!(f, "result: pass ({} properties)", self.properties.len())
        } else {
            write!(f, "result: FAIL ({failed} of {} properties)", self.properties.len())
        }
    }
}

/// Double posets grouped by degree.
pub struct Universe {
    general: Vec<Vec<CanonicalForm>>,
    special: Vec<Vec<CanonicalForm>>,
    samples: Vec<Vec<CanonicalForm>>,
    special_samples: Vec<Vec<CanonicalForm>>,
}

impl Universe {
    pub fn new(max_n: usize, seed: u64) -> Result<Self> {
        if max_n > crate::canon::CANON_CAP {
            return Err(Error::SizeCap {
                what: "universe",
                size: max_n,
                cap: crate::canon::CANON_CAP,
            });
        }
        let mut general = Vec::new();
        let mut special = Vec::new();
        let mut samples = Vec::new();
        let mut special_samples = Vec::new();
        for n in 0..=max_n {
            let g = if n <= EXHAUSTIVE_MAX {
                all_classes(n)?
            } else {
                random_classes(n, false, &mut stream(seed, n, 0))?
            };
            let s = if n <= SPECIAL_EXHAUSTIVE_MAX {
                special_classes(n)?
            } else {
                random_classes(n, true, &mut stream(seed, n, 1))?
            };
            samples.push(pick_sample(&g, &mut stream(seed, n, 2)));
            special_samples.push(pick_sample(&s, &mut stream(seed, n, 3)));
            general.push(g);
            special.push(s);
        }
        Ok(Self {
            general,
            special,
            samples,
            special_samples,
        })
    }

    pub fn max_n(&self) -> usize {
        self.general.len() - 1
    }

    /// Every class of degree `n`, or the random sample above the
    /// exhaustive range.
    pub fn general(&self, n: usize) -> &[CanonicalForm] {
        self.general.get(n).map_or(&[], Vec::as_slice)
    }

    /// Special classes of degree `n`.
    pub fn special(&self, n: usize) -> &[CanonicalForm] {
        self.special.get(n).map_or(&[], Vec::as_slice)
    }

    /// At most [`SAMPLE_SIZE`] classes of degree `n`.
    pub fn sample(&self, n: usize) -> &[CanonicalForm] {
        self.samples.get(n).map_or(&[], Vec::as_slice)
    }

    /// At most [`SAMPLE_SIZE`] special classes of degree `n`.
    pub fn special_sample(&self, n: usize) -> &[CanonicalForm] {
        self.special_samples.get(n).map_or(&[], Vec::as_slice)
    }

    fn general_up_to(&self, n: usize) -> impl Iterator<Item = &CanonicalForm> {
        (0..=n.min(self.max_n())).flat_map(move |k| self.general(k))
    }

    fn special_up_to(&self, n: usize) -> impl Iterator<Item = &CanonicalForm> {
        (0..=n.min(self.max_n())).flat_map(move |k| self.special(k))
    }

    /// Pairs `(a, b)` with `deg a + deg b ≤ total`.
    fn pairs<'a>(
        &'a self,
        total: usize,
        pick: impl Fn(&'a Self, usize) -> &'a [CanonicalForm] + Copy + 'a,
    ) -> impl Iterator<Item = (&'a CanonicalForm, &'a CanonicalForm)> + 'a {
        let top = total.min(self.max_n());
        (0..=top).flat_map(move |i| {
            (0..=(total - i).min(top))
                .flat_map(move |j| pick(self, i).iter().flat_map(move |a| pick(self, j).iter().map(move |b| (a, b))))
        })
    }
}

fn pick_sample(all: &[CanonicalForm], rng: &mut ChaCha8Rng) -> Vec<CanonicalForm> {
    let mut pick = all.to_vec();
    if pick.len() > SAMPLE_SIZE {
        pick.shuffle(rng);
        pick.truncate(SAMPLE_SIZE);
        pick.sort();
    }
    pick
}

fn stream(seed: u64, n: usize, kind: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64 * 4 + kind);
    rng
}

/// All classes of degree `n`, by canonicalizing every pair of labelled
/// posets.
pub fn all_classes(n: usize) -> Result<Vec<CanonicalForm>> {
    let relations = poset::all_relations(n);
    let mut out = BTreeSet::new();
    for r1 in &relations {
        for r2 in &relations {
            out.insert(DoublePoset::new(r1.clone(), r2.clone())?.canonical_form()?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Special classes of degree `n`: one per labelled poset.
pub fn special_classes(n: usize) -> Result<Vec<CanonicalForm>> {
    let mut out = BTreeSet::new();
    for r1 in poset::all_relations(n) {
        out.insert(DoublePoset::new(r1, Relation::natural(n))?.canonical_form()?);
    }
    Ok(out.into_iter().collect())
}

/// A random order: each forward pair of a shuffled sequence is kept with
/// probability ½, then closed.
pub fn random_relation<R: RngExt>(n: usize, rng: &mut R) -> Relation {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.5) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Relation::new(n, &pairs).expect("forward pairs of a sequence are acyclic")
}

fn random_classes<R: RngExt>(n: usize, special: bool, rng: &mut R) -> Result<Vec<CanonicalForm>> {
    let mut out = BTreeSet::new();
    for _ in 0..SAMPLE_SIZE * 8 {
        if out.len() == SAMPLE_SIZE {
            break;
        }
        let r1 = random_relation(n, rng);
        let r2 = if special {
            Relation::natural(n)
        } else {
            random_relation(n, rng)
        };
        out.insert(DoublePoset::new(r1, r2)?.canonical_form()?);
    }
    Ok(out.into_iter().collect())
}

fn basis(x: &CanonicalForm) -> DElement {
    DElement::basis(x.clone())
}

fn degree_of<K: Ord + Clone>(t: &LinComb<K>, deg: impl Fn(&K) -> usize, expected: usize) -> bool {
    t.keys().all(|k| deg(k) == expected)
}

/// Picture counts, tabulated once per degree.
struct PairingTable {
    index: Vec<HashMap<CanonicalForm, usize>>,
    table: Vec<Vec<u64>>,
}

impl PairingTable {
    fn new(u: &Universe, max_n: usize) -> Self {
        let mut index = Vec::new();
        let mut table = Vec::new();
        for n in 0..=max_n.min(u.max_n()) {
            let classes = u.general(n);
            let posets: Vec<DoublePoset> = classes.iter().map(CanonicalForm::double_poset).collect();
            let mut t = Vec::with_capacity(posets.len() * posets.len());
            for a in &posets {
                for b in &posets {
                    t.push(double_poset::pairing_basis(a, b));
                }
            }
            index.push(classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect());
            table.push(t);
        }
        Self { index, table }
    }

    fn get(&self, a: &CanonicalForm, b: &CanonicalForm) -> i64 {
        if a.n() != b.n() {
            return 0;
        }
        let n = a.n();
        let count = match (self.index.get(n).and_then(|m| m.get(a)), self.index.get(n).and_then(|m| m.get(b))) {
            (Some(&i), Some(&j)) => self.table[n][i * self.index[n].len() + j],
            _ => double_poset::pairing_basis(&a.double_poset(), &b.double_poset()),
        };
        count as i64
    }
}

// ---------------------------------------------------------------- hopf

#[derive(Clone, Copy, Debug)]
pub struct HopfBounds {
    /// Pairs and triples are taken up to this total degree.
    pub product_degree: usize,
    /// Single elements are taken up to this degree.
    pub coproduct_degree: usize,
}

type DTriple = LinComb<(CanonicalForm, CanonicalForm, CanonicalForm)>;

pub fn hopf_suite(u: &Universe, b: HopfBounds) -> Result<Report> {
    const S: &str = "hopf";
    let mut unit = PropertyResult::new(S, "unit");
    let mut assoc = PropertyResult::new(S, "associativity");
    let mut bialgebra = PropertyResult::new(S, "bialgebra");
    let mut coassoc = PropertyResult::new(S, "coassociativity");
    let mut counit = PropertyResult::new(S, "counit");
    let mut left = PropertyResult::new(S, "antipode_left");
    let mut right = PropertyResult::new(S, "antipode_right");
    let mut grading = PropertyResult::new(S, "grading");
    let mut antipode = Antipode::new();
    let one = algebra::unit();

    for (x, y) in u.pairs(b.product_degree, Universe::general) {
        let (a, c) = (basis(x), basis(y));
        let ab = algebra::product(&a, &c)?;
        grading.record(degree_of(&ab, CanonicalForm::n, x.n() + y.n()));
        let lhs = algebra::coproduct(&ab)?;
        let rhs = algebra::tensor_product(&algebra::coproduct(&a)?, &algebra::coproduct(&c)?)?;
        bialgebra.record(lhs == rhs);
        let top = b.product_degree - x.n() - y.n();
        for z in (0..=top.min(u.max_n())).flat_map(|k| u.general(k)) {
            let e = basis(z);
            let l = algebra::product(&ab, &e)?;
            let r = algebra::product(&a, &algebra::product(&c, &e)?)?;
            assoc.record(l == r);
        }
    }

    for x in u.general_up_to(b.coproduct_degree) {
        let a = basis(x);
        unit.record(algebra::product(&one, &a)? == a && algebra::product(&a, &one)? == a);
        let delta = algebra::coproduct(&a)?;
        grading.record(delta.keys().all(|(l, r)| l.n() + r.n() == x.n()));

        let mut l3 = DTriple::zero();
        let mut r3 = DTriple::zero();
        let mut eps_left = DElement::zero();
        let mut eps_right = DElement::zero();
        let mut s_left = DElement::zero();
        let mut s_right = DElement::zero();
        for ((p, q), &c) in &delta {
            for ((p1, p2), &d) in &algebra::coproduct_basis(p)? {
                l3.add_term((p1.clone(), p2.clone(), q.clone()), c * d)?;
            }
            for ((q1, q2), &d) in &algebra::coproduct_basis(q)? {
                r3.add_term((p.clone(), q1.clone(), q2.clone()), c * d)?;
            }
            if p.n() == 0 {
                eps_left.add_term(q.clone(), c)?;
            }
            if q.n() == 0 {
                eps_right.add_term(p.clone(), c)?;
            }
            s_left.add_scaled(c, &algebra::product(&antipode.basis(p)?, &basis(q))?)?;
            s_right.add_scaled(c, &algebra::product(&basis(p), &antipode.basis(q)?)?)?;
        }
        coassoc.record(l3 == r3);
        counit.record(eps_left == a && eps_right == a);
        let expected = one.scale(algebra::counit(&a))?;
        left.record(s_left == expected);
        right.record(s_right == expected);
        grading.record(degree_of(&antipode.basis(x)?, CanonicalForm::n, x.n()));
    }

    Ok(Report {
        properties: vec![unit, assoc, bialgebra, coassoc, counit, left, right, grading],
    })
}

// ------------------------------------------------------------ selfdual

#[derive(Clone, Copy, Debug)]
pub struct SelfDualBounds {
    /// Triples `(e, f, g)` with `deg e + deg f = deg g` up to this degree.
    pub triple_degree: usize,
    /// Pairs of equal degree up to this degree.
    pub pair_degree: usize,
}

pub fn selfdual_suite(u: &Universe, b: SelfDualBounds) -> Result<Report> {
    const S: &str = "selfdual";
    let mut duality = PropertyResult::new(S, "product_coproduct_duality");
    let mut symmetry = PropertyResult::new(S, "symmetry");
    let mut relabel = PropertyResult::new(S, "relabel_invariance");
    let mut extensions = PropertyResult::new(S, "special_linear_extensions");
    let table = PairingTable::new(u, EXHAUSTIVE_MAX.min(b.triple_degree.max(b.pair_degree)));

    for d in 0..=b.triple_degree.min(u.max_n()) {
        for g in u.general(d) {
            let delta = algebra::coproduct_basis(g)?;
            for i in 0..=d {
                for e in u.general(i) {
                    for f in u.general(d - i) {
                        let ef = algebra::product_basis(e, f)?;
                        let lhs = table.get(&ef, g);
                        let mut rhs = 0i64;
                        for ((g1, g2), &c) in &delta {
                            if g1.n() == i {
                                rhs += c * table.get(e, g1) * table.get(f, g2);
                            }
                        }
                        duality.record(lhs == rhs);
                    }
                }
            }
        }
    }

    for n in 0..=b.pair_degree.min(u.max_n()) {
        let classes = u.general(n);
        for e in classes {
            for f in classes {
                symmetry.record(table.get(e, f) == table.get(f, e));
            }
            let ed = e.double_poset();
            let reversed: Vec<usize> = (0..n).rev().collect();
            let rotated: Vec<usize> = (0..n).map(|i| (i + 1) % n.max(1)).collect();
            for f in u.sample(n) {
                let fd = f.double_poset();
                let base = table.get(e, f) as u64;
                relabel.record(
                    double_poset::pairing_basis(&ed.relabel(&reversed), &fd) == base
                        && double_poset::pairing_basis(&ed, &fd.relabel(&rotated)) == base,
                );
            }
        }
        let pool = if n <= EXHAUSTIVE_MAX { u.special(n) } else { u.special_sample(n) };
        let specials: Vec<(DoublePoset, BTreeSet<Permutation>)> = pool
            .iter()
            .map(|x| {
                let d = x.double_poset();
                let ext = perm::linear_extensions_special(&d).map(|v| v.into_iter().collect());
                ext.map(|ext| (d, ext))
            })
            .collect::<Result<_>>()?;
        for (e, ext_e) in &specials {
            for (f, ext_f) in &specials {
                let count = ext_e.iter().filter(|s| ext_f.contains(&s.inverse())).count() as u64;
                extensions.record(double_poset::pairing_basis(e, f) == count);
            }
        }
    }

    Ok(Report {
        properties: vec![duality, symmetry, relabel, extensions],
    })
}

// ------------------------------------------------------------ internal

#[derive(Clone, Copy, Debug)]
pub struct InternalBounds {
    /// `P_σ ∘ P_τ` for `σ, τ ∈ S_n` up to this `n`.
    pub permutation_degree: usize,
    /// All triples of this degree and below.
    pub adjunction_degree: usize,
    /// Sampled triples above `adjunction_degree` up to this degree.
    pub sampled_degree: usize,
}

pub fn internal_suite(u: &Universe, b: InternalBounds) -> Result<Report> {
    const S: &str = "internal";
    let mut perms = PropertyResult::new(S, "permutation_composition");
    let mut adjunction = PropertyResult::new(S, "adjunction");
    let mut projections = PropertyResult::new(S, "graph_projections");
    let mut grading = PropertyResult::new(S, "grading");

    for n in 0..=b.permutation_degree {
        let all = Permutation::all(n);
        let posets: Vec<DoublePoset> = all.iter().map(DoublePoset::from_permutation).collect();
        for (s, ps) in all.iter().zip(&posets) {
            for (t, pt) in all.iter().zip(&posets) {
                let lhs = algebra::internal_product(&algebra::basis(ps)?, &algebra::basis(pt)?)?;
                let rhs = algebra::basis(&DoublePoset::from_permutation(&s.compose(t)?))?;
                perms.record(lhs == rhs);
            }
        }
    }

    let top = b.adjunction_degree.max(b.sampled_degree).min(u.max_n());
    for n in 0..=top {
        let classes = if n <= b.adjunction_degree { u.general(n) } else { u.sample(n) };
        let posets: Vec<DoublePoset> = classes.iter().map(CanonicalForm::double_poset).collect();
        let mut products = Vec::with_capacity(classes.len() * classes.len());
        for (x, e) in classes.iter().zip(&posets) {
            for (y, f) in classes.iter().zip(&posets) {
                let ip = algebra::internal_product_basis(x, y)?;
                grading.record(degree_of(&ip, CanonicalForm::n, n));
                products.push(ip);
                if n <= b.adjunction_degree {
                    let ok = double_poset::increasing_bijections(e, f).iter().all(|phi| {
                        let g = double_poset::internal_graph(e, f, phi).expect("generated increasing");
                        g.second() == e.second()
                            && (0..n).all(|p| (0..n).all(|q| g.first().less(p, q) == f.first().less(phi[p], phi[q])))
                    });
                    projections.record(ok);
                }
            }
        }
        let m = classes.len();
        let mut memo: HashMap<(CanonicalForm, usize), i64> = HashMap::new();
        let mut pair = |v: &DElement, k: usize| -> i64 {
            v.iter()
                .map(|(h, &c)| {
                    let p = *memo.entry((h.clone(), k)).or_insert_with(|| {
                        double_poset::pairing_basis(&h.double_poset(), &posets[k]) as i64
                    });
                    c * p
                })
                .sum()
        };
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let lhs = pair(&products[i * m + j], k);
                    let rhs = pair(&products[j * m + k], i);
                    adjunction.record(lhs == rhs);
                }
            }
        }
    }
    for (x, y) in u.pairs(top, Universe::sample) {
        if x.n() != y.n() {
            grading.record(algebra::internal_product_basis(x, y)?.is_zero());
        }
    }

    Ok(Report {
        properties: vec![perms, adjunction, projections, grading],
    })
}

// ---------------------------------------------------------------- lmap

#[derive(Clone, Copy, Debug)]
pub struct LmapBounds {
    /// Special pairs up to this total degree.
    pub pair_degree: usize,
    /// Special pairs of equal degree and single elements up to this degree.
    pub single_degree: usize,
}

fn l_of(x: &CanonicalForm) -> Result<SElement> {
    perm::linear_extension_map(&basis(x))
}

fn l_tensor(t: &DTensor) -> Result<STensor> {
    let mut out = STensor::zero();
    for ((x, y), &c) in t {
        for (s, &a) in &l_of(x)? {
            for (r, &b) in &l_of(y)? {
                out.add_term((s.clone(), r.clone()), c * a * b)?;
            }
        }
    }
    Ok(out)
}

pub fn lmap_suite(u: &Universe, b: LmapBounds) -> Result<Report> {
    const S: &str = "lmap";
    let mut s_bialgebra = PropertyResult::new(S, "permutation_bialgebra");
    let mut algebra_m = PropertyResult::new(S, "algebra_morphism");
    let mut coalgebra_m = PropertyResult::new(S, "coalgebra_morphism");
    let mut isometry = PropertyResult::new(S, "isometry");
    let mut internal = PropertyResult::new(S, "internal_compatibility");
    let mut fits = PropertyResult::new(S, "fits_duality");
    let mut closure = PropertyResult::new(S, "special_closure");

    for total in 0..=b.single_degree {
        for i in 0..=total {
            for s in Permutation::all(i) {
                for t in Permutation::all(total - i) {
                    let lhs = perm::coproduct_s_linear(&perm::shifted_shuffle(&s, &t)?)?;
                    let rhs = perm::tensor_product_s(
                        &perm::coproduct_s_linear(&SElement::basis(s.clone()))?,
                        &perm::coproduct_s_linear(&SElement::basis(t.clone()))?,
                    )?;
                    s_bialgebra.record(lhs == rhs);
                }
            }
        }
    }

    for (x, y) in u.pairs(b.pair_degree, Universe::special) {
        let xy = algebra::product(&basis(x), &basis(y))?;
        algebra_m.record(perm::linear_extension_map(&xy)? == perm::product_s(&l_of(x)?, &l_of(y)?)?);
        let (dx, dy) = (x.double_poset(), y.double_poset());
        let c = dx.compose(&dy);
        let natural = dx.is_naturally_labelled() && dy.is_naturally_labelled();
        closure.record(c.is_special() && (!natural || c.is_naturally_labelled()));
    }

    for x in u.special_up_to(b.pair_degree) {
        let delta = algebra::coproduct(&basis(x))?;
        coalgebra_m.record(perm::coproduct_s_linear(&l_of(x)?)? == l_tensor(&delta)?);
        let d = x.double_poset();
        let natural = d.is_naturally_labelled();
        closure.record(d.decompose().iter().all(|(i, s)| {
            i.is_special() && s.is_special() && (!natural || (i.is_naturally_labelled() && s.is_naturally_labelled()))
        }));
    }

    for n in 0..=b.single_degree.min(u.max_n()) {
        let classes = if n <= EXHAUSTIVE_MAX { u.special(n) } else { u.special_sample(n) };
        let images: Vec<SElement> = classes.iter().map(l_of).collect::<Result<_>>()?;
        for (x, lx) in classes.iter().zip(&images) {
            for (y, ly) in classes.iter().zip(&images) {
                let p = algebra::pairing(&basis(x), &basis(y))?;
                isometry.record(p == perm::joellenbeck(lx, ly)?);
                let ip = algebra::internal_product_basis(x, y)?;
                internal.record(perm::linear_extension_map(&ip)? == perm::internal_s(lx, ly)?);
            }
            let d = x.double_poset();
            for s in Permutation::all(n) {
                let inverse_fits = lr::fits_into(&s.inverse().to_word(), &d)?;
                fits.record(lx.coefficient(&s) == i64::from(inverse_fits));
            }
        }
    }

    Ok(Report {
        properties: vec![s_bialgebra, algebra_m, coalgebra_m, isometry, internal, fits, closure],
    })
}

// ---------------------------------------------------------------- qsym

#[derive(Clone, Copy, Debug)]
pub struct QsymBounds {
    /// Pairs up to this total degree, single elements up to this degree.
    pub morphism_degree: usize,
    /// Special elements for `F ∘ L = Γ` up to this degree.
    pub special_degree: usize,
    /// Partitions for the Schur expansion up to this size.
    pub schur_degree: usize,
}

#[derive(Default)]
struct GammaCache(HashMap<CanonicalForm, QElement>);

impl GammaCache {
    fn get(&mut self, x: &CanonicalForm) -> Result<QElement> {
        if let Some(v) = self.0.get(x) {
            return Ok(v.clone());
        }
        let v = qsym::gamma(&x.double_poset())?;
        self.0.insert(x.clone(), v.clone());
        Ok(v)
    }

    fn linear(&mut self, a: &DElement) -> Result<QElement> {
        a.map_linear(|x| self.get(x))
    }
}

pub fn qsym_suite(u: &Universe, b: QsymBounds) -> Result<Report> {
    const S: &str = "qsym";
    let mut algebra_m = PropertyResult::new(S, "algebra_morphism");
    let mut coalgebra_m = PropertyResult::new(S, "coalgebra_morphism");
    let mut fl = PropertyResult::new(S, "fundamental_of_linear_extensions");
    let mut schur = PropertyResult::new(S, "schur_expansion");
    let mut homogeneity = PropertyResult::new(S, "homogeneity");
    let mut gamma = GammaCache::default();

    for (x, y) in u.pairs(b.morphism_degree, Universe::general) {
        let lhs = gamma.linear(&algebra::product(&basis(x), &basis(y))?)?;
        algebra_m.record(lhs == qsym::qsym_product(&gamma.get(x)?, &gamma.get(y)?)?);
    }

    for x in u.general_up_to(b.morphism_degree) {
        let g = gamma.get(x)?;
        homogeneity.record(degree_of(&g, Composition::weight, x.n()));
        let mut rhs = QTensor::zero();
        for ((p, q), &c) in &algebra::coproduct_basis(x)? {
            for (s, &a) in &gamma.get(p)? {
                for (t, &d) in &gamma.get(q)? {
                    rhs.add_term((s.clone(), t.clone()), c * a * d)?;
                }
            }
        }
        coalgebra_m.record(qsym::coproduct_q(&g)? == rhs);
    }

    for x in u.special_up_to(b.special_degree) {
        fl.record(qsym::fundamental_of(&l_of(x)?)? == gamma.get(x)?);
    }

    for n in 0..=b.schur_degree {
        for nu in Partition::all(n) {
            let g = qsym::gamma(&DoublePoset::pi_from_partition(&nu))?;
            schur.record(g == schur_monomial_expansion(nu.parts()));
        }
    }

    Ok(Report {
        properties: vec![algebra_m, coalgebra_m, fl, schur, homogeneity],
    })
}

/// Shapes `κ ⊇ from` with `κ ⊆ bound` and `κ/from` a horizontal strip of
/// `size` cells. Shapes are padded to `bound.len()` rows.
fn horizontal_strips(from: &[usize], bound: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(from: &[usize], bound: &[usize], row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == from.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut hi = bound[row];
        if row > 0 {
            hi = hi.min(from[row - 1]);
        }
        for len in from[row]..=hi.max(from[row]) {
            let added = len - from[row];
            if added > left {
                break;
            }
            cur.push(len);
            rec(from, bound, row + 1, left - added, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(from, bound, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Monomial expansion of the Schur function `s_ν`: the coefficient of
/// `M_α` counts semistandard tableaux of shape `ν` and content `α`.
pub fn schur_monomial_expansion(nu: &[usize]) -> QElement {
    fn count(shape: &[usize], bound: &[usize], content: &[usize]) -> i64 {
        match content.split_first() {
            None => i64::from(shape == bound),
            Some((&c, rest)) => horizontal_strips(shape, bound, c)
                .iter()
                .map(|next| count(next, bound, rest))
                .sum(),
        }
    }
    let n = nu.iter().sum();
    let mut out = QElement::zero();
    for alpha in Composition::all(n) {
        let k = count(&vec![0; nu.len()], nu, alpha.parts());
        out.add_term(alpha, k).expect("tableau counts are small");
    }
    out
}

// ------------------------------------------------------------------ lr

#[derive(Clone, Copy, Debug)]
pub struct LrBounds {
    /// Special double posets against every partition of their size.
    pub theorem_degree: usize,
    /// `⟨π_λ, π_μ⟩` for `λ, μ ⊢ n` up to this `n`.
    pub orthonormal_degree: usize,
    /// Classical coefficients `c^λ_{μν}` for `|λ|` up to this size.
    pub classical_degree: usize,
    /// Lattice word and tableau identities up to this size.
    pub tableau_degree: usize,
    /// Fitting permutations of special double posets up to this degree.
    pub fits_degree: usize,
}

pub fn lr_suite(u: &Universe, b: LrBounds) -> Result<Report> {
    const S: &str = "lr";
    let mut theorem = PropertyResult::new(S, "theorem");
    let mut ortho = PropertyResult::new(S, "orthonormality");
    let mut classical = PropertyResult::new(S, "classical_coefficients");
    let mut count = PropertyResult::new(S, "lattice_word_count");
    let mut shape = PropertyResult::new(S, "tableau_shape");
    let mut involutions = PropertyResult::new(S, "complement_mirror_involutions");
    let mut st = PropertyResult::new(S, "standardization_identities");
    let mut row = PropertyResult::new(S, "row_word_inverse");
    let mut reading = PropertyResult::new(S, "reading_words");
    let mut tilde = PropertyResult::new(S, "tilde_duality");
    let mut standardize = PropertyResult::new(S, "fits_standardization");

    for n in 0..=b.theorem_degree.min(u.max_n()) {
        let partitions = Partition::all(n);
        let pis: Vec<DoublePoset> = partitions.iter().map(DoublePoset::pi_from_partition).collect();
        for x in u.special(n) {
            let d = x.double_poset();
            for (nu, pi) in partitions.iter().zip(&pis) {
                let p = double_poset::pairing_basis(&d, pi);
                theorem.record(p == lr::lr_count_complement(&d, nu)? && p == lr::lr_count_mirror(&d, nu)?);
            }
        }
    }

    for n in 0..=b.orthonormal_degree {
        let pis: Vec<DoublePoset> = Partition::all(n).iter().map(DoublePoset::pi_from_partition).collect();
        for (i, a) in pis.iter().enumerate() {
            for (j, c) in pis.iter().enumerate() {
                ortho.record(double_poset::pairing_basis(a, c) == u64::from(i == j));
            }
        }
    }

    for n in 0..=b.classical_degree {
        for lambda in Partition::all(n) {
            let pl = DoublePoset::pi_from_partition(&lambda);
            for k in 0..=n {
                for mu in Partition::all(k) {
                    for nu in Partition::all(n - k) {
                        let c = DoublePoset::pi_from_partition(&mu).compose(&DoublePoset::pi_from_partition(&nu));
                        let expected = lr_coefficient(lambda.parts(), mu.parts(), nu.parts());
                        classical.record(double_poset::pairing_basis(&c, &pl) == expected);
                    }
                }
            }
        }
    }

    let mut syt = HashMap::new();
    for n in 0..=b.tableau_degree {
        for nu in Partition::all(n) {
            let words = lr::lattice_words(&nu);
            count.record(words.len() as u64 == standard_tableaux_count(nu.parts(), &mut syt));
            for w in &words {
                let t = lr::tableau_from_lattice(w);
                shape.record(matches!(&t, Ok(t) if t.shape() == nu) && lr::weight(w)? == nu);
                involutions.record(lr::complement(&lr::complement(w)) == *w && lr::mirror(&lr::mirror(w)) == *w);
                if nu.is_strict() {
                    st.record(lr::st_identities_check(w)?.all_hold());
                }
                row.record(lr::row_word_identity(w)?);
                let (first, second) = lr::reading_word_identities(w)?;
                reading.record(first && second);
            }
        }
    }

    for n in 0..=b.fits_degree.min(u.max_n()) {
        let w0 = Permutation::longest(n);
        let all = Permutation::all(n);
        let words = words_over(n, 2);
        for x in u.special(n) {
            let d = x.double_poset();
            let t = d.tilde();
            for s in &all {
                let conj = w0.compose(&s.compose(&w0)?)?;
                tilde.record(lr::fits_into(&s.to_word(), &d)? == lr::fits_into(&conj.to_word(), &t)?);
            }
            for w in &words {
                let (direct, standardized) = lr::fits_standardization_check(w, &d)?;
                standardize.record(direct == standardized);
            }
        }
    }

    Ok(Report {
        properties: vec![
            theorem,
            ortho,
            classical,
            count,
            shape,
            involutions,
            st,
            row,
            reading,
            tilde,
            standardize,
        ],
    })
}

fn words_over(n: usize, letters: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..=letters).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|w| Word::new(w).expect("letters are positive")).collect()
}

/// Standard tableaux of shape `nu`, by removing the cell holding the
/// largest entry.
pub fn standard_tableaux_count(nu: &[usize], memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
    let shape: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
    if shape.iter().sum::<usize>() <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&shape) {
        return v;
    }
    let mut total = 0;
    for r in 0..shape.len() {
        if r + 1 == shape.len() || shape[r + 1] < shape[r] {
            let mut smaller = shape.clone();
            smaller[r] -= 1;
            total += standard_tableaux_count(&smaller, memo);
        }
    }
    memo.insert(shape, total);
    total
}

/// Littlewood-Richardson coefficient `c^λ_{μν}`: semistandard fillings of
/// `λ/μ` with content `ν` whose reading word (rows top to bottom, each
/// right to left) is a lattice word.
pub fn lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let rows = lambda.len();
    if mu.len() > rows || mu.iter().zip(lambda).any(|(m, l)| m > l) {
        return 0;
    }
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() + nu.iter().sum::<usize>() {
        return 0;
    }
    fn rec(shape: &[usize], lambda: &[usize], nu: &[usize], letter: usize, filling: &mut Vec<Vec<usize>>) -> u64 {
        if letter == nu.len() {
            return u64::from(shape == lambda && lattice_reading(filling));
        }
        let mut total = 0;
        for next in horizontal_strips(shape, lambda, nu[letter]) {
            for (r, row) in filling.iter_mut().enumerate() {
                row.resize(next[r], letter + 1);
            }
            total += rec(&next, lambda, nu, letter + 1, filling);
            for (r, row) in filling.iter_mut().enumerate() {
                row.truncate(shape[r]);
            }
        }
        total
    }
    fn lattice_reading(filling: &[Vec<usize>]) -> bool {
        let mut counts = vec![0usize; filling.iter().flatten().copied().max().unwrap_or(0) + 2];
        for row in filling {
            for &a in row.iter().rev().filter(|&&a| a > 0) {
                counts[a] += 1;
                if a > 1 && counts[a] > counts[a - 1] {
                    return false;
                }
            }
        }
        true
    }
    let mut start = mu.to_vec();
    start.resize(rows, 0);
    let mut filling: Vec<Vec<usize>> = start.iter().map(|&m| vec![0; m]).collect();
    rec(&start, lambda, nu, 0, &mut filling)
}

// ----------------------------------------------------------------- run

impl HopfBounds {
    pub fn for_max_n(m: usize) -> Self {
        Self {
            product_degree: m,
            coproduct_degree: m,
        }
    }
}

impl SelfDualBounds {
    pub fn for_max_n(m: usize) -> Self {
        Self {
            triple_degree: m,
            pair_degree: m,
        }
    }
}

impl InternalBounds {
    pub fn for_max_n(m: usize) -> Self {
        Self {
            permutation_degree: m.min(5),
            adjunction_degree: m.min(3),
            sampled_degree: m,
        }
    }
}

impl LmapBounds {
    pub fn for_max_n(m: usize) -> Self {
        Self {
            pair_degree: m,
            single_degree: m,
        }
    }
}

impl QsymBounds {
    pub fn for_max_n(m: usize) -> Self {
        Self {
            morphism_degree: m,
            special_degree: m,
            schur_degree: m,
        }
    }
}

impl LrBounds {
    pub fn for_max_n(m: usize) -> Self {
        Self {
            theorem_degree: m,
            orthonormal_degree: m,
            classical_degree: m,
            tableau_degree: m,
            fits_degree: m,
        }
    }
}

/// Runs `suite` with every bound set to `max_n`.
pub fn run(suite: Suite, max_n: usize, seed: u64) -> Result<Report> {
    if max_n > CHECK_MAX_N {
        return Err(Error::SizeCap {
            what: "check",
            size: max_n,
            cap: CHECK_MAX_N,
        });
    }
    let u = Universe::new(max_n, seed)?;
    let m = max_n;
    let mut report = Report::default();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Hopf) {
        report.extend(hopf_suite(&u, HopfBounds::for_max_n(m))?);
    }
    if wants(Suite::SelfDual) {
        report.extend(selfdual_suite(&u, SelfDualBounds::for_max_n(m))?);
    }
    if wants(Suite::Internal) {
        report.extend(internal_suite(&u, InternalBounds::for_max_n(m))?);
    }
    if wants(Suite::Lmap) {
        report.extend(lmap_suite(&u, LmapBounds::for_max_n(m))?);
    }
    if wants(Suite::Qsym) {
        report.extend(qsym_suite(&u, QsymBounds::for_max_n(m))?);
    }
    if wants(Suite::Lr) {
        report.extend(lr_suite(&u, LrBounds::for_max_n(m))?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=3).map(|n| all_classes(n).unwrap().len()).collect();
        assert_eq!(&counts[..2], &[1, 1]);
        // Two elements: each order is empty or one of the two arrows, and
        // swapping the labels identifies the mixed cases in pairs.
        assert_eq!(counts[2], 5);
        let specials: Vec<usize> = (0..=4).map(|n| special_classes(n).unwrap().len()).collect();
        assert_eq!(specials, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn samples_are_seeded() {
        let a = Universe::new(5, 9).unwrap();
        let b = Universe::new(5, 9).unwrap();
        assert_eq!(a.general(5), b.general(5));
        assert_eq!(a.sample(4), b.sample(4));
        assert_eq!(a.general(5).len(), SAMPLE_SIZE);
        assert!(a.special(6).is_empty());
    }

    #[test]
    fn oracles() {
        let mut memo = HashMap::new();
        assert_eq!(standard_tableaux_count(&[2, 1], &mut memo), 2);
        assert_eq!(standard_tableaux_count(&[3, 2], &mut memo), 5);
        assert_eq!(lr_coefficient(&[2, 1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[1], &[1]), 0);
        assert_eq!(lr_coefficient(&[3, 2, 1], &[2, 1], &[2, 1]), 2);
        assert_eq!(lr_coefficient(&[2], &[1, 1], &[]), 0);
        let s21 = schur_monomial_expansion(&[2, 1]);
        let c = |v: Vec<usize>| s21.coefficient(&Composition::new(v).unwrap());
        assert_eq!((c(vec![2, 1]), c(vec![1, 2]), c(vec![1, 1, 1]), c(vec![3])), (1, 1, 2, 0));
    }

    #[test]
    fn small_suites_pass() {
        let report = run(Suite::All, 2, 0).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.properties.iter().all(|p| p.cases > 0), "{report}");
    }

    #[test]
    fn suite_names() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
