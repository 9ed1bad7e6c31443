//! Weight distributions and minimum distances.
//!
//! Three routes: Gray-code enumeration of all codewords, enumeration of the
//! dual followed by the MacWilliams transform, and (when both sides are too
//! big) a BCH lower bound paired with a randomized information-set search.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::code::LinearCode;
use crate::cyclic::CyclicCodeSpec;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modp;

pub const DEFAULT_BUDGET: u64 = 1 << 26;
pub const DEEP_BUDGET: u64 = 1 << 29;
pub const MAX_BUDGET: u64 = 1 << 30;
pub const DEFAULT_SEARCH_ITERATIONS: usize = 1000;

const MAX_PACKED_WORDS: usize = 16;
const SEARCH_CHUNK: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistributionSource {
    Enumeration,
    Macwilliams,
}

/// A_0..A_n of a linear code, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    q: u32,
    counts: Vec<BigUint>,
    source: DistributionSource,
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("WeightDistribution", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("counts", &counts)?;
        st.serialize_field("source", &self.source)?;
        st.end()
    }
}

impl WeightDistribution {
    pub fn from_counts(q: u32, counts: Vec<BigUint>, source: DistributionSource) -> Self {
        Self { n: counts.len() - 1, q, counts, source }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn source(&self) -> DistributionSource {
        self.source
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest i > 0 with A_i != 0.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&i| !self.counts[i].is_zero())
    }

    /// Counts as u64, when they all fit.
    pub fn counts_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.try_into().ok()).collect()
    }
}

/// A distance bound; `Infinite` stands for the zero code (no nonzero word).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(usize),
    Infinite,
}

impl Bound {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::Finite(d) => Some(d),
            Bound::Infinite => None,
        }
    }

    fn from_option(d: Option<usize>) -> Self {
        d.map_or(Bound::Infinite, Bound::Finite)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(d) => write!(f, "{d}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Bound::from_option(Option::<usize>::deserialize(d)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "enumeration")]
    Enumeration,
    #[serde(rename = "dual-macwilliams")]
    DualMacwilliams,
    #[serde(rename = "bch+search")]
    BchSearch,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Trivial => "trivial",
            Method::Enumeration => "enumeration",
            Method::DualMacwilliams => "dual-macwilliams",
            Method::BchSearch => "bch+search",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub exact: bool,
    pub lower: Bound,
    pub upper: Bound,
    pub method: Method,
    pub budget: u64,
    pub seed: Option<u64>,
}

impl DistanceReport {
    fn exact(d: Bound, method: Method, budget: u64) -> Self {
        Self { exact: true, lower: d, upper: d, method, budget, seed: None }
    }

    /// The distance if known exactly.
    pub fn value(&self) -> Option<Bound> {
        self.exact.then_some(self.lower)
    }

    /// Whether `d` lies within [lower, upper].
    pub fn admits(&self, d: usize) -> bool {
        self.lower <= Bound::Finite(d) && Bound::Finite(d) <= self.upper
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "{}..{}", self.lower, self.upper)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceOptions {
    pub budget: u64,
    pub search_iterations: usize,
    pub seed: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, search_iterations: DEFAULT_SEARCH_ITERATIONS, seed: 0 }
    }
}

impl DistanceOptions {
    pub fn deep() -> Self {
        Self { budget: DEEP_BUDGET, ..Self::default() }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        Self { budget, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn check(&self) -> Result<()> {
        if self.budget > MAX_BUDGET {
            return Err(Error::Budget { what: "enumeration budget", detail: format!("{} > cap {MAX_BUDGET}", self.budget) });
        }
        Ok(())
    }
}

/// q^k if it fits in u64.
fn word_count(q: u32, k: usize) -> Option<u64> {
    (q as u64).checked_pow(u32::try_from(k).ok()?)
}

/// Whether q^k codewords fit in the budget.
pub fn within(q: u32, k: usize, budget: u64) -> bool {
    word_count(q, k).is_some_and(|w| w <= budget)
}

/// All codewords of G, weights tallied.
pub fn weight_distribution_exhaustive(g: &LinearCode, budget: u64) -> Result<WeightDistribution> {
    DistanceOptions { budget, ..Default::default() }.check()?;
    let (q, k, n) = (g.q(), g.k(), g.n());
    if !within(q, k, budget) {
        return Err(Error::Budget {
            what: "codeword enumeration",
            detail: format!(
                "{q}^{k} words exceed the budget of {budget}; the dual route would enumerate {q}^{} words",
                n - k
            ),
        });
    }
    let counts = if q == 2 { enumerate_binary(g.generator()) } else { enumerate_qary(g.generator()) };
    Ok(WeightDistribution::from_counts(q, counts.into_iter().map(BigUint::from).collect(), DistributionSource::Enumeration))
}

/// Number of leading message symbols fixed per parallel partition.
fn partition_digits(k: usize, q: u32) -> usize {
    let threshold = if q == 2 { 20 } else { 12 };
    if k > threshold {
        (k - threshold).min(if q == 2 { 8 } else { 3 })
    } else {
        0
    }
}

fn pack_rows<const W: usize>(m: &Matrix) -> Vec<[u64; W]> {
    (0..m.rows())
        .map(|r| {
            let mut w = [0u64; W];
            for (c, &x) in m.row(r).iter().enumerate() {
                if x != 0 {
                    w[c / 64] |= 1 << (c % 64);
                }
            }
            w
        })
        .collect()
}

fn unpack<const W: usize>(w: &[u64; W], n: usize) -> Vec<u32> {
    (0..n).map(|c| ((w[c / 64] >> (c % 64)) & 1) as u32).collect()
}

#[inline]
fn popcount<const W: usize>(w: &[u64; W]) -> usize {
    w.iter().map(|x| x.count_ones() as usize).sum()
}

#[inline]
fn xor_into<const W: usize>(acc: &mut [u64; W], row: &[u64; W]) {
    for i in 0..W {
        acc[i] ^= row[i];
    }
}

macro_rules! with_words {
    ($n:expr, $f:ident $(::<$($g:ty),*>)?, ($($arg:expr),*)) => {{
        match ($n).div_ceil(64).max(1) {
            1 => $f::<1>($($arg),*),
            2 => $f::<2>($($arg),*),
            3 => $f::<3>($($arg),*),
            4 => $f::<4>($($arg),*),
            5 => $f::<5>($($arg),*),
            6 => $f::<6>($($arg),*),
            7 => $f::<7>($($arg),*),
            8 => $f::<8>($($arg),*),
            9 => $f::<9>($($arg),*),
            10 => $f::<10>($($arg),*),
            11 => $f::<11>($($arg),*),
            12 => $f::<12>($($arg),*),
            13 => $f::<13>($($arg),*),
            14 => $f::<14>($($arg),*),
            15 => $f::<15>($($arg),*),
            16 => $f::<16>($($arg),*),
            w => panic!("length needs {w} words, above {MAX_PACKED_WORDS}"),
        }
    }};
}

fn enumerate_binary(g: &Matrix) -> Vec<u64> {
    with_words!(g.cols(), enumerate_binary_packed, (g))
}

fn enumerate_binary_packed<const W: usize>(g: &Matrix) -> Vec<u64> {
    let n = g.cols();
    let rows = pack_rows::<W>(g);
    let k = rows.len();
    let hi = partition_digits(k, 2);
    let lo = k - hi;
    let (low_rows, high_rows) = rows.split_at(lo);
    (0u64..1 << hi)
        .into_par_iter()
        .map(|h| {
            let mut word = [0u64; W];
            for (j, r) in high_rows.iter().enumerate() {
                if (h >> j) & 1 == 1 {
                    xor_into(&mut word, r);
                }
            }
            let mut counts = vec![0u64; n + 1];
            counts[popcount(&word)] += 1;
            // step i flips the row indexed by the lowest set bit of i
            for i in 1u64..1 << lo {
                xor_into(&mut word, &low_rows[i.trailing_zeros() as usize]);
                counts[popcount(&word)] += 1;
            }
            counts
        })
        .reduce(|| vec![0u64; n + 1], add_counts)
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

fn enumerate_qary(g: &Matrix) -> Vec<u64> {
    let (q, n, k) = (g.p(), g.cols(), g.rows());
    let sparse: Vec<Vec<(usize, u32)>> = (0..k)
        .map(|r| g.row(r).iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, &x)| (c, x)).collect())
        .collect();
    let hi = partition_digits(k, q);
    let lo = k - hi;
    let parts = (q as u64).pow(hi as u32);
    (0..parts)
        .into_par_iter()
        .map(|h| {
            let mut word = vec![0u32; n];
            let mut weight = 0usize;
            let add_row = |word: &mut Vec<u32>, weight: &mut usize, r: usize, times: u32| {
                for &(c, x) in &sparse[r] {
                    let old = word[c];
                    let new = modp::add(old, modp::mul(x, times, q), q);
                    word[c] = new;
                    *weight = *weight + usize::from(new != 0) - usize::from(old != 0);
                }
            };
            let mut hh = h;
            for j in 0..hi {
                let digit = (hh % q as u64) as u32;
                hh /= q as u64;
                if digit != 0 {
                    add_row(&mut word, &mut weight, lo + j, digit);
                }
            }
            let mut counts = vec![0u64; n + 1];
            counts[weight] += 1;
            let mut digits = vec![0u32; lo];
            // odometer; a wrapping digit adds its row a q-th time, returning it to 0
            'outer: loop {
                let mut pos = 0;
                loop {
                    if pos == lo {
                        break 'outer;
                    }
                    add_row(&mut word, &mut weight, pos, 1);
                    digits[pos] += 1;
                    if digits[pos] == q {
                        digits[pos] = 0;
                        pos += 1;
                    } else {
                        break;
                    }
                }
                counts[weight] += 1;
            }
            counts
        })
        .reduce(|| vec![0u64; n + 1], add_counts)
}

/// K_0(i)..K_n(i) for fixed i via the three-term recurrence in j.
fn krawtchouk_column(n: usize, q: u32, i: usize) -> Vec<BigInt> {
    let q = BigInt::from(q);
    let qm1 = &q - 1;
    let mut col = Vec::with_capacity(n + 1);
    col.push(BigInt::one());
    if n == 0 {
        return col;
    }
    col.push(&qm1 * n - &q * i);
    for j in 1..n {
        let a: BigInt = &qm1 * (n - j) + j - &q * i;
        let b: BigInt = &qm1 * (n - j + 1);
        let num: BigInt = a * &col[j] - b * &col[j - 1];
        let (quot, rem) = num.div_rem(&BigInt::from(j + 1));
        debug_assert!(rem.is_zero());
        col.push(quot);
    }
    col
}

/// Dual distribution: A'_j = q^-k * sum_i A_i K_j(i).
pub fn macwilliams_transform(w: &WeightDistribution, k: usize, q: u32) -> Result<WeightDistribution> {
    if q != w.q {
        return Err(Error::MixedFields);
    }
    let size = BigUint::from(q).pow(k as u32);
    if w.total() != size {
        return Err(Error::Dimension(format!("distribution sums to {}, expected {q}^{k}", w.total())));
    }
    let n = w.n;
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in w.counts.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (slot, kj) in acc.iter_mut().zip(krawtchouk_column(n, q, i)) {
            *slot += &a * kj;
        }
    }
    let size = BigInt::from_biguint(Sign::Plus, size);
    let mut counts = Vec::with_capacity(n + 1);
    for (j, s) in acc.into_iter().enumerate() {
        let (quot, rem) = s.div_rem(&size);
        if !rem.is_zero() || quot.is_negative() {
            return Err(Error::Internal(format!("MacWilliams produced a non-integral or negative A'_{j}")));
        }
        counts.push(quot.to_biguint().expect("non-negative"));
    }
    Ok(WeightDistribution::from_counts(q, counts, DistributionSource::Macwilliams))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub weight: Bound,
    pub codeword: Option<Vec<u32>>,
}

/// Lee-Brickell search: random information sets, patterns of weight <= 2.
pub fn random_minweight_search(g: &LinearCode, iterations: usize, seed: u64) -> SearchOutcome {
    if g.k() == 0 || iterations == 0 {
        return SearchOutcome { weight: Bound::Infinite, codeword: None };
    }
    let chunks = iterations.div_ceil(SEARCH_CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = SEARCH_CHUNK.min(iterations - c * SEARCH_CHUNK);
            let found = if g.q() == 2 {
                with_words!(g.n(), lee_brickell_binary, (g.generator(), count, &mut rng))
            } else {
                lee_brickell_qary(g.generator(), count, &mut rng)
            };
            found.map(|(w, word)| (w, c, word))
        })
        .min_by_key(|(w, c, _)| (*w, *c));
    match best {
        Some((w, _, word)) => SearchOutcome { weight: Bound::Finite(w), codeword: Some(word) },
        None => SearchOutcome { weight: Bound::Infinite, codeword: None },
    }
}

fn lee_brickell_binary<const W: usize>(g: &Matrix, iterations: usize, rng: &mut ChaCha8Rng) -> Option<(usize, Vec<u32>)> {
    let n = g.cols();
    let base = pack_rows::<W>(g);
    let k = base.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, [u64; W])> = None;
    let consider = |w: [u64; W], best: &mut Option<(usize, [u64; W])>| {
        let wt = popcount(&w);
        if wt > 0 && best.is_none_or(|(b, _)| wt < b) {
            *best = Some((wt, w));
        }
    };
    for _ in 0..iterations {
        perm.shuffle(rng);
        let mut rows = base.clone();
        let mut rank = 0;
        for &c in &perm {
            if rank == k {
                break;
            }
            let bit = |r: &[u64; W]| (r[c / 64] >> (c % 64)) & 1 == 1;
            let Some(p) = (rank..k).find(|&r| bit(&rows[r])) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && bit(row) {
                    xor_into(row, &pivot);
                }
            }
            rank += 1;
        }
        for a in 0..k {
            consider(rows[a], &mut best);
            for b in a + 1..k {
                let mut w = rows[a];
                xor_into(&mut w, &rows[b]);
                consider(w, &mut best);
            }
        }
    }
    best.map(|(w, word)| (w, unpack(&word, n)))
}

fn lee_brickell_qary(g: &Matrix, iterations: usize, rng: &mut ChaCha8Rng) -> Option<(usize, Vec<u32>)> {
    let (q, n, k) = (g.p(), g.cols(), g.rows());
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<u32>)> = None;
    let consider = |w: Vec<u32>, best: &mut Option<(usize, Vec<u32>)>| {
        let wt = crate::linalg::hamming_weight(&w);
        if wt > 0 && best.as_ref().is_none_or(|(b, _)| wt < *b) {
            *best = Some((wt, w));
        }
    };
    for _ in 0..iterations {
        perm.shuffle(rng);
        let e = g.echelon_in_order(&perm);
        let rows: Vec<&[u32]> = (0..k).map(|r| e.matrix.row(r)).collect();
        for a in 0..k {
            consider(rows[a].to_vec(), &mut best);
            for b in a + 1..k {
                for c in 1..q {
                    let w = rows[a].iter().zip(rows[b]).map(|(&x, &y)| modp::add(x, modp::mul(c, y, q), q)).collect();
                    consider(w, &mut best);
                }
            }
        }
    }
    best
}

/// Input to [`min_distance`].
#[derive(Clone, Copy, Debug)]
pub enum CodeRef<'a> {
    Cyclic(&'a CyclicCodeSpec),
    Linear(&'a LinearCode),
}

impl<'a> From<&'a CyclicCodeSpec> for CodeRef<'a> {
    fn from(c: &'a CyclicCodeSpec) -> Self {
        CodeRef::Cyclic(c)
    }
}

impl<'a> From<&'a LinearCode> for CodeRef<'a> {
    fn from(c: &'a LinearCode) -> Self {
        CodeRef::Linear(c)
    }
}

/// Strategy ladder: enumerate, else enumerate the dual and transform, else
/// bracket between the BCH bound and a randomized search.
pub fn min_distance<'a>(code: impl Into<CodeRef<'a>>, opts: &DistanceOptions) -> Result<DistanceReport> {
    match code.into() {
        CodeRef::Cyclic(c) => DistanceEngine::new(*opts)?.report(c),
        CodeRef::Linear(g) => {
            opts.check()?;
            let (q, n, k) = (g.q(), g.n(), g.k());
            if k == 0 {
                return Ok(DistanceReport::exact(Bound::Infinite, Method::Trivial, opts.budget));
            }
            if within(q, k, opts.budget) {
                let w = weight_distribution_exhaustive(g, opts.budget)?;
                return Ok(DistanceReport::exact(Bound::from_option(w.min_nonzero_weight()), Method::Enumeration, opts.budget));
            }
            if within(q, n - k, opts.budget) {
                let dual = weight_distribution_exhaustive(&g.dual(), opts.budget)?;
                let w = macwilliams_transform(&dual, n - k, q)?;
                return Ok(DistanceReport::exact(Bound::from_option(w.min_nonzero_weight()), Method::DualMacwilliams, opts.budget));
            }
            Ok(bracket(Bound::Finite(1), g, opts))
        }
    }
}

fn bracket(lower: Bound, g: &LinearCode, opts: &DistanceOptions) -> DistanceReport {
    let upper = random_minweight_search(g, opts.search_iterations, opts.seed).weight;
    DistanceReport { exact: lower == upper, lower, upper, method: Method::BchSearch, budget: opts.budget, seed: Some(opts.seed) }
}

/// Distance computations for cyclic codes, memoizing weight distributions so
/// a code and its dual share one enumeration.
pub struct DistanceEngine {
    opts: DistanceOptions,
    distributions: Mutex<HashMap<CyclicCodeSpec, Arc<WeightDistribution>>>,
    reports: Mutex<HashMap<CyclicCodeSpec, DistanceReport>>,
}

impl DistanceEngine {
    pub fn new(opts: DistanceOptions) -> Result<Self> {
        opts.check()?;
        Ok(Self { opts, distributions: Mutex::default(), reports: Mutex::default() })
    }

    pub fn options(&self) -> &DistanceOptions {
        &self.opts
    }

    fn cached(&self, c: &CyclicCodeSpec) -> Option<Arc<WeightDistribution>> {
        self.distributions.lock().expect("cache lock").get(c).cloned()
    }

    fn store(&self, c: &CyclicCodeSpec, w: WeightDistribution) -> Arc<WeightDistribution> {
        let w = Arc::new(w);
        self.distributions.lock().expect("cache lock").insert(c.clone(), w.clone());
        w
    }

    /// Exact weight distribution when reachable within the budget.
    pub fn distribution(&self, c: &CyclicCodeSpec) -> Result<Option<Arc<WeightDistribution>>> {
        if let Some(w) = self.cached(c) {
            return Ok(Some(w));
        }
        let (q, n, k) = (c.q(), c.n() as usize, c.dim());
        let dual = c.dual();
        if let Some(dw) = self.cached(&dual) {
            let w = macwilliams_transform(&dw, n - k, q)?;
            return Ok(Some(self.store(c, w)));
        }
        if within(q, k, self.opts.budget) {
            let w = weight_distribution_exhaustive(&c.linear_code()?, self.opts.budget)?;
            return Ok(Some(self.store(c, w)));
        }
        if within(q, n - k, self.opts.budget) {
            let dw = weight_distribution_exhaustive(&dual.linear_code()?, self.opts.budget)?;
            let dw = self.store(&dual, dw);
            let w = macwilliams_transform(&dw, n - k, q)?;
            return Ok(Some(self.store(c, w)));
        }
        Ok(None)
    }

    pub fn report(&self, c: &CyclicCodeSpec) -> Result<DistanceReport> {
        if let Some(r) = self.reports.lock().expect("cache lock").get(c) {
            return Ok(r.clone());
        }
        let report = self.compute_report(c)?;
        self.reports.lock().expect("cache lock").insert(c.clone(), report.clone());
        Ok(report)
    }

    fn compute_report(&self, c: &CyclicCodeSpec) -> Result<DistanceReport> {
        let budget = self.opts.budget;
        if c.dim() == 0 {
            return Ok(DistanceReport::exact(Bound::Infinite, Method::Trivial, budget));
        }
        if let Some(w) = self.distribution(c)? {
            let method = match w.source() {
                DistributionSource::Enumeration => Method::Enumeration,
                DistributionSource::Macwilliams => Method::DualMacwilliams,
            };
            return Ok(DistanceReport::exact(Bound::from_option(w.min_nonzero_weight()), method, budget));
        }
        Ok(bracket(Bound::Finite(c.bch_bound()), &c.linear_code()?, &self.opts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::code_from_cosets;
    use proptest::prelude::*;

    fn ints(w: &WeightDistribution) -> Vec<u64> {
        w.counts_u64().unwrap()
    }

    fn hamming() -> LinearCode {
        code_from_cosets(&[0, 1], 7, 2).unwrap().linear_code().unwrap()
    }

    #[test]
    fn repetition_and_hamming() {
        let rep = code_from_cosets(&[0], 7, 2).unwrap().linear_code().unwrap();
        assert_eq!(ints(&weight_distribution_exhaustive(&rep, 16).unwrap()), vec![1, 0, 0, 0, 0, 0, 0, 1]);
        let w = weight_distribution_exhaustive(&hamming(), 16).unwrap();
        assert_eq!(ints(&w), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert!(matches!(weight_distribution_exhaustive(&hamming(), 15), Err(Error::Budget { .. })));
    }

    #[test]
    fn macwilliams_small() {
        let whole = WeightDistribution::from_counts(2, [1u32, 3, 3, 1].map(BigUint::from).to_vec(), DistributionSource::Enumeration);
        assert_eq!(ints(&macwilliams_transform(&whole, 3, 2).unwrap()), vec![1, 0, 0, 0]);
        let w = weight_distribution_exhaustive(&hamming(), 16).unwrap();
        let simplex = macwilliams_transform(&w, 4, 2).unwrap();
        assert_eq!(ints(&simplex), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        assert_eq!(simplex.source(), DistributionSource::Macwilliams);
        assert!(macwilliams_transform(&w, 3, 2).is_err());
    }

    #[test]
    fn macwilliams_rejects_impossible_input() {
        // not the distribution of any linear [3,1] code
        let bogus = WeightDistribution::from_counts(2, [1u32, 1, 0, 0].map(BigUint::from).to_vec(), DistributionSource::Enumeration);
        assert!(macwilliams_transform(&bogus, 1, 2).is_ok());
        let bogus = WeightDistribution::from_counts(2, [1u32, 0, 1, 2].map(BigUint::from).to_vec(), DistributionSource::Enumeration);
        assert!(matches!(macwilliams_transform(&bogus, 2, 2), Err(Error::Internal(_))));
    }

    #[test]
    fn ternary_enumeration_matches_naive() {
        let c = code_from_cosets(&[0, 1], 13, 3).unwrap().linear_code().unwrap();
        let w = weight_distribution_exhaustive(&c, 1 << 10).unwrap();
        let mut naive = vec![0u64; 14];
        for cw in c.codewords() {
            naive[crate::code::weight(&cw)] += 1;
        }
        assert_eq!(ints(&w), naive);
        let dual = weight_distribution_exhaustive(&c.dual(), 1 << 20).unwrap();
        assert_eq!(macwilliams_transform(&w, 4, 3).unwrap().counts(), dual.counts());
    }

    #[test]
    fn partitioned_enumeration_matches_unpartitioned() {
        // k = 26 > 20 forces partitioning over the top message bits
        let c = code_from_cosets(&[0, 1, 3, 5, 7, 11], 31, 2).unwrap();
        assert_eq!(c.dim(), 26);
        let w = weight_distribution_exhaustive(&c.linear_code().unwrap(), 1 << 26).unwrap();
        let dual = weight_distribution_exhaustive(&c.dual().linear_code().unwrap(), 1 << 5).unwrap();
        assert_eq!(macwilliams_transform(&dual, 5, 2).unwrap().counts(), w.counts());
    }

    #[test]
    fn search_finds_hamming_weight() {
        for seed in 0..5 {
            let s = random_minweight_search(&hamming(), 4, seed);
            assert_eq!(s.weight, Bound::Finite(3));
            assert!(hamming().contains(&s.codeword.unwrap()));
        }
        let zero = LinearCode::zero(2, 7);
        assert_eq!(random_minweight_search(&zero, 10, 0).weight, Bound::Infinite);
    }

    #[test]
    fn search_is_deterministic() {
        let g = code_from_cosets(&[0, 1, 3, 5, 9, 11, 19, 21], 127, 2).unwrap().linear_code().unwrap();
        let a = random_minweight_search(&g, 100, 7);
        let b = random_minweight_search(&g, 100, 7);
        assert_eq!(a, b);
        assert!(g.contains(&a.codeword.unwrap()));
    }

    #[test]
    fn ternary_search() {
        let c = code_from_cosets(&[0, 1], 13, 3).unwrap().linear_code().unwrap();
        let exact = weight_distribution_exhaustive(&c, 100).unwrap().min_nonzero_weight().unwrap();
        assert_eq!(random_minweight_search(&c, 64, 1).weight, Bound::Finite(exact));
    }

    #[test]
    fn ladder_methods() {
        let opts = DistanceOptions::default().with_budget(1 << 14);
        let c = code_from_cosets(&[0, 31], 127, 2).unwrap();
        let r = min_distance(&c, &opts).unwrap();
        assert_eq!((r.exact, r.lower, r.method), (true, Bound::Finite(63), Method::Enumeration));
        let star = c.star(&code_from_cosets(&[0, 5, 23, 27, 31], 127, 2).unwrap()).unwrap();
        let r = min_distance(&star, &opts).unwrap();
        assert_eq!((r.exact, r.lower, r.method), (true, Bound::Finite(5), Method::DualMacwilliams));
        let big = code_from_cosets(&[0, 1, 5, 9, 3, 11, 19, 21], 127, 2).unwrap();
        let r = min_distance(&big, &opts).unwrap();
        assert_eq!((r.lower, r.method, r.seed), (Bound::Finite(27), Method::BchSearch, Some(0)));
        assert!(r.lower <= r.upper);
        let zero = CyclicCodeSpec::zero(2, 7).unwrap();
        assert_eq!(min_distance(&zero, &opts).unwrap().lower, Bound::Infinite);
        let lin = hamming();
        let r = min_distance(&lin, &opts).unwrap();
        assert_eq!((r.lower, r.method), (Bound::Finite(3), Method::Enumeration));
    }

    #[test]
    fn example_code_u21() {
        let c = code_from_cosets(&[21], 63, 2).unwrap();
        assert_eq!(min_distance(&c, &DistanceOptions::default()).unwrap().value(), Some(Bound::Finite(42)));
    }

    #[test]
    fn engine_shares_dual_enumeration() {
        let engine = DistanceEngine::new(DistanceOptions::default().with_budget(1 << 11)).unwrap();
        let c = code_from_cosets(&[0, 1, 3], 31, 2).unwrap();
        let d = c.dual();
        assert_eq!(engine.distribution(&c).unwrap().unwrap().source(), DistributionSource::Enumeration);
        assert_eq!(engine.distribution(&d).unwrap().unwrap().source(), DistributionSource::Macwilliams);
        assert!(matches!(DistanceEngine::new(DistanceOptions::default().with_budget(MAX_BUDGET + 1)), Err(Error::Budget { .. })));
    }

    #[test]
    fn report_json() {
        let r = DistanceReport { exact: false, lower: Bound::Finite(27), upper: Bound::Infinite, method: Method::BchSearch, budget: 64, seed: Some(3) };
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"exact":false,"lower":27,"upper":null,"method":"bch+search","budget":64,"seed":3}"#);
        assert_eq!(serde_json::from_str::<DistanceReport>(&s).unwrap(), r);
    }

    fn random_binary_code() -> impl Strategy<Value = LinearCode> {
        (1usize..9, 1usize..14).prop_flat_map(|(k, extra)| {
            let n = k + extra;
            proptest::collection::vec(proptest::collection::vec(0u32..2, n), k).prop_map(move |rows| {
                LinearCode::from_spanning(Matrix::from_rows(2, n, &rows).unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn row_order_does_not_matter(code in random_binary_code(), shift in 0usize..8) {
            let mut rows = code.generator().row_vectors();
            let len = rows.len();
            if len > 0 {
                rows.rotate_left(shift % len);
            }
            let permuted = LinearCode::new(Matrix::from_rows(2, code.n(), &rows).unwrap()).unwrap();
            prop_assert_eq!(
                weight_distribution_exhaustive(&code, 1 << 12).unwrap(),
                weight_distribution_exhaustive(&permuted, 1 << 12).unwrap()
            );
        }

        #[test]
        fn macwilliams_is_an_involution(code in random_binary_code()) {
            let (n, k) = (code.n(), code.k());
            let w = weight_distribution_exhaustive(&code, 1 << 12).unwrap();
            let dual = macwilliams_transform(&w, k, 2).unwrap();
            let direct = weight_distribution_exhaustive(&code.dual(), 1 << 14).unwrap();
            prop_assert_eq!(dual.counts(), direct.counts());
            let back = macwilliams_transform(&dual, n - k, 2).unwrap();
            prop_assert_eq!(back.counts(), w.counts());
        }
    }
}
