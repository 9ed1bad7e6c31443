//! Simulation of star-product PIR on a coded distributed storage system.
//!
//! Each stored row y_m = a_m G_C sits across n servers, one coordinate each.
//! For a round targeting global row l and embedding set S, the user draws one
//! uniform codeword d_m of D per stored row and sends server j the column
//! (d_m[j])_m, with 1 added at row l when j is in S. Server j answers
//! <Q_j, Y_j>, so the response vector is sum_m d_m * y_m + y_l * 1_S and the
//! first part lies in C*D. Multiplying by a generator H of (C*D)^perp kills
//! it, leaving H|_S y_l|_S, which is invertible when S is an information set
//! of (C*D)^perp.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::binomial;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::code::LinearCode;
use crate::cyclic::CyclicCodeSpec;
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix};
use crate::modp;
use crate::scheme::Rate;

/// Subsets checked exhaustively up to this count.
pub const EXHAUSTIVE_SUBSET_LIMIT: u64 = 1_000_000;

/// r files of rho rows each, every row a message of length k; file i owns
/// global rows i*rho .. (i+1)*rho.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Database {
    files: usize,
    rows_per_file: usize,
    data: Matrix,
}

impl Database {
    pub fn new(files: usize, rows_per_file: usize, data: Matrix) -> Result<Self> {
        if files == 0 || rows_per_file == 0 || data.cols() == 0 {
            return Err(Error::Dimension("database dimensions must be positive".into()));
        }
        if data.rows() != files * rows_per_file {
            return Err(Error::Dimension(format!(
                "{} rows for {files} files of {rows_per_file} rows",
                data.rows()
            )));
        }
        Ok(Self { files, rows_per_file, data })
    }

    pub fn zero(q: u32, files: usize, rows_per_file: usize, k: usize) -> Result<Self> {
        Self::new(files, rows_per_file, Matrix::zeros(q, files * rows_per_file, k))
    }

    pub fn random(q: u32, files: usize, rows_per_file: usize, k: usize, rng: &mut impl Rng) -> Result<Self> {
        let mut m = Matrix::zeros(q, files * rows_per_file, k);
        for r in 0..m.rows() {
            for c in 0..k {
                m.set(r, c, rng.random_range(0..q));
            }
        }
        Self::new(files, rows_per_file, m)
    }

    pub fn q(&self) -> u32 {
        self.data.p()
    }

    pub fn files(&self) -> usize {
        self.files
    }

    pub fn rows_per_file(&self) -> usize {
        self.rows_per_file
    }

    pub fn total_rows(&self) -> usize {
        self.data.rows()
    }

    pub fn k(&self) -> usize {
        self.data.cols()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.data
    }

    pub fn file(&self, i: usize) -> Vec<Vec<u32>> {
        (i * self.rows_per_file..(i + 1) * self.rows_per_file).map(|r| self.data.row(r).to_vec()).collect()
    }
}

/// Y = A G_C; column j is what server j holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StorageState {
    y: Matrix,
}

impl StorageState {
    pub fn matrix(&self) -> &Matrix {
        &self.y
    }

    pub fn server_column(&self, j: usize) -> Vec<u32> {
        self.y.column(j)
    }

    pub fn row(&self, m: usize) -> &[u32] {
        self.y.row(m)
    }
}

pub fn encode_storage(db: &Database, gc: &LinearCode) -> Result<StorageState> {
    if db.k() != gc.k() || db.q() != gc.q() {
        return Err(Error::Dimension(format!(
            "database rows have length {} over GF({}), storage code is [{}, {}] over GF({})",
            db.k(),
            db.q(),
            gc.n(),
            gc.k(),
            gc.q()
        )));
    }
    Ok(StorageState { y: db.matrix().mul(gc.generator())? })
}

/// Codes and matrices shared by every round.
#[derive(Clone, Debug)]
pub struct ProtocolSetup {
    pub c: CyclicCodeSpec,
    pub d: CyclicCodeSpec,
    pub gc: LinearCode,
    pub gd: LinearCode,
    /// Generator of (C*D)^perp.
    pub h: Matrix,
}

impl ProtocolSetup {
    pub fn new(c: &CyclicCodeSpec, d: &CyclicCodeSpec) -> Result<Self> {
        let star = c.star(d)?;
        if star.dim() == star.n() as usize {
            return Err(Error::StarFillsSpace);
        }
        let field = c.default_field()?;
        Ok(Self {
            c: c.clone(),
            d: d.clone(),
            gc: c.generator_matrix(&field)?,
            gd: d.generator_matrix(&field)?,
            h: star.dual().generator_matrix(&field)?.generator().clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.gc.n()
    }

    pub fn q(&self) -> u32 {
        self.gc.q()
    }

    /// dim (C*D)^perp, symbols recovered per round.
    pub fn u(&self) -> usize {
        self.h.rows()
    }

    pub fn nominal_rate(&self) -> Rate {
        Rate::new(self.u() as u64, self.n() as u64)
    }
}

/// Embedding sets: S_0 and cyclic shifts of it covering every coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Schedule {
    pub sets: Vec<Vec<usize>>,
    pub shifts: Vec<usize>,
}

pub fn plan_rounds(setup: &ProtocolSetup) -> Result<Schedule> {
    let (n, u) = (setup.n(), setup.u());
    if u == 0 {
        return Err(Error::Unusable("(C*D)^perp is the zero code".into()));
    }
    let s0 = setup.h.echelon().pivots;
    let shift = |s: usize| -> Vec<usize> {
        let mut v: Vec<usize> = s0.iter().map(|&x| (x + s) % n).collect();
        v.sort_unstable();
        v
    };
    let mut covered = vec![false; n];
    s0.iter().for_each(|&x| covered[x] = true);
    let mut shifts = vec![0];
    while covered.iter().any(|&c| !c) {
        let gain = |s: usize| s0.iter().filter(|&&x| !covered[(x + s) % n]).count();
        let best = (1..n).max_by_key(|&s| (gain(s), std::cmp::Reverse(s))).expect("n > 1 when uncovered");
        shift(best).iter().for_each(|&x| covered[x] = true);
        shifts.push(best);
    }
    Ok(Schedule { sets: shifts.iter().map(|&s| shift(s)).collect(), shifts })
}

/// What server `server` receives; nothing else about the round is sent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Query {
    pub server: usize,
    pub vector: Vec<u32>,
}

/// Queries built from explicit D-messages, one per stored row.
pub fn make_queries_from_messages(
    setup: &ProtocolSetup,
    messages: &[Vec<u32>],
    target_row: usize,
    s: &[usize],
) -> Result<Vec<Query>> {
    let q = setup.q();
    let codewords: Vec<Vec<u32>> = messages.iter().map(|m| setup.gd.encode(m)).collect::<Result<_>>()?;
    if target_row >= codewords.len() {
        return Err(Error::Dimension(format!("target row {target_row} of {}", codewords.len())));
    }
    let mut queries: Vec<Query> = (0..setup.n())
        .map(|j| Query { server: j, vector: codewords.iter().map(|d| d[j]).collect() })
        .collect();
    for &j in s {
        let v = &mut queries[j].vector[target_row];
        *v = modp::add(*v, 1, q);
    }
    Ok(queries)
}

/// Uniform codewords of D for every stored row, plus the unit embedding.
pub fn make_queries(
    setup: &ProtocolSetup,
    total_rows: usize,
    target_row: usize,
    s: &[usize],
    rng: &mut impl Rng,
) -> Result<Vec<Query>> {
    let (q, kd) = (setup.q(), setup.gd.k());
    let messages: Vec<Vec<u32>> =
        (0..total_rows).map(|_| (0..kd).map(|_| rng.random_range(0..q)).collect()).collect();
    make_queries_from_messages(setup, &messages, target_row, s)
}

pub fn server_respond(query: &[u32], column: &[u32], q: u32) -> Result<u32> {
    if query.len() != column.len() {
        return Err(Error::Dimension(format!("query of length {} against {} stored symbols", query.len(), column.len())));
    }
    Ok(dot(query, column, q))
}

/// Answers queries; tests substitute faulty implementations.
pub trait Responder {
    fn respond(&self, query: &Query) -> Result<u32>;
}

/// Stateless servers computing the inner product with their column.
pub struct HonestServers<'a> {
    storage: &'a StorageState,
}

impl<'a> HonestServers<'a> {
    pub fn new(storage: &'a StorageState) -> Self {
        Self { storage }
    }
}

impl Responder for HonestServers<'_> {
    fn respond(&self, query: &Query) -> Result<u32> {
        server_respond(&query.vector, &self.storage.server_column(query.server), self.storage.y.p())
    }
}

/// Solves H|_S x = H r; x is the target row on S.
pub fn reconstruct(responses: &[u32], h: &Matrix, s: &[usize]) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let syndrome = h.mul_vec(responses)?;
    h.select_columns(s)
        .solve(&syndrome)
        .ok_or_else(|| Error::Internal("embedding set is not an information set of (C*D)^perp".into()))
}

/// Whether r - y_l * 1_S lies in C*D.
pub fn decomposition_holds(setup: &ProtocolSetup, target: &[u32], s: &[usize], responses: &[u32]) -> bool {
    let q = setup.q();
    let mut v = responses.to_vec();
    for &j in s {
        v[j] = modp::sub(v[j], target[j], q);
    }
    setup.h.mul_vec(&v).is_ok_and(|syn| syn.iter().all(|&x| x == 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub queries_digest: String,
    pub responses: Vec<u32>,
    pub recovered: Vec<(usize, u32)>,
}

fn digest(queries: &[Query]) -> String {
    let mut h = Sha256::new();
    for q in queries {
        h.update((q.server as u64).to_le_bytes());
        for &x in &q.vector {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetrievalReport {
    pub file: Vec<Vec<u32>>,
    pub rounds: usize,
    pub downloads: usize,
    pub effective_rate: Rate,
    pub nominal_rate: Rate,
    /// Rounds where the response minus the masked row fell outside C*D.
    pub decomposition_failures: usize,
    pub transcript: Vec<RoundRecord>,
}

/// Retrieves file `file` (0-based) row by row; each row takes rounds from
/// the schedule until the recovered coordinates hold an information set of C.
pub fn run_full_retrieval(
    setup: &ProtocolSetup,
    db: &Database,
    storage: &StorageState,
    responder: &dyn Responder,
    file: usize,
    seed: u64,
) -> Result<RetrievalReport> {
    if file >= db.files() {
        return Err(Error::Dimension(format!("file {file} of {}", db.files())));
    }
    let schedule = plan_rounds(setup)?;
    let (n, k) = (setup.n(), setup.gc.k());
    let mut transcript = Vec::new();
    let mut rows = Vec::with_capacity(db.rows_per_file());
    let mut decomposition_failures = 0;
    for l in 0..db.rows_per_file() {
        let target = file * db.rows_per_file() + l;
        let mut known: BTreeMap<usize, u32> = BTreeMap::new();
        for s in &schedule.sets {
            let round = transcript.len();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(round as u64);
            let queries = make_queries(setup, db.total_rows(), target, s, &mut rng)?;
            let responses: Vec<u32> = queries.iter().map(|qy| responder.respond(qy)).collect::<Result<_>>()?;
            if !decomposition_holds(setup, storage.row(target), s, &responses) {
                decomposition_failures += 1;
            }
            let values = reconstruct(&responses, &setup.h, s)?;
            for (&j, &v) in s.iter().zip(&values) {
                if known.insert(j, v).is_some_and(|old| old != v) {
                    return Err(Error::InconsistentResponses);
                }
            }
            transcript.push(RoundRecord {
                round,
                s: s.clone(),
                queries_digest: digest(&queries),
                responses,
                recovered: s.iter().copied().zip(values).collect(),
            });
            let coords: Vec<usize> = known.keys().copied().collect();
            if setup.gc.covers_information_set(&coords) {
                break;
            }
        }
        rows.push(decode_row(&setup.gc, &known)?);
    }
    let rounds = transcript.len();
    let downloads = n * rounds;
    Ok(RetrievalReport {
        file: rows,
        rounds,
        downloads,
        effective_rate: Rate::new((db.rows_per_file() * k) as u64, downloads as u64),
        nominal_rate: setup.nominal_rate(),
        decomposition_failures,
        transcript,
    })
}

/// Message a with a G_C matching every known coordinate.
fn decode_row(gc: &LinearCode, known: &BTreeMap<usize, u32>) -> Result<Vec<u32>> {
    let k = gc.k();
    if k == 0 {
        return Ok(Vec::new());
    }
    let coords: Vec<usize> = known.keys().copied().collect();
    let sub = gc.generator().select_columns(&coords);
    let pivots = sub.transpose().echelon().pivots;
    if pivots.len() < k {
        return Err(Error::Internal("recovered coordinates do not determine the row".into()));
    }
    // pivots of the transpose are rows of sub^T, i.e. coordinates
    let info: Vec<usize> = pivots.iter().map(|&p| coords[p]).collect();
    let system = gc.generator().select_columns(&info).transpose();
    let rhs: Vec<u32> = info.iter().map(|j| known[j]).collect();
    let a = system.solve(&rhs).ok_or_else(|| Error::Internal("information set is singular".into()))?;
    let word = gc.encode(&a)?;
    if known.iter().any(|(&j, &v)| word[j] != v) {
        return Err(Error::InconsistentResponses);
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrivacyMode {
    /// Exhaustive when C(n, t) is at most the limit, otherwise sampled.
    Auto { trials: u64 },
    Exhaustive,
    Sampled { trials: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrivacyVerdict {
    pub passed: bool,
    pub t: usize,
    pub exhaustive: bool,
    pub subsets_checked: u64,
    /// Columns of G_D that are linearly dependent, on failure.
    pub witness: Option<Vec<usize>>,
}

/// Every t columns of G_D independent, i.e. d(D^perp) > t: then any t
/// servers see uniform, independent query entries whatever the file.
pub fn privacy_check(gd: &LinearCode, t: usize, mode: PrivacyMode, seed: u64) -> Result<PrivacyVerdict> {
    let n = gd.n();
    let independent = |cols: &[usize]| gd.generator().select_columns(cols).rank() == cols.len();
    if t > n {
        return Ok(PrivacyVerdict { passed: false, t, exhaustive: true, subsets_checked: 0, witness: None });
    }
    let total = binomial(n as u128, t as u128);
    let exhaustive = match mode {
        PrivacyMode::Exhaustive => {
            if total > EXHAUSTIVE_SUBSET_LIMIT as u128 {
                return Err(Error::Budget {
                    what: "exhaustive privacy check",
                    detail: format!("C({n},{t}) = {total} subsets exceed {EXHAUSTIVE_SUBSET_LIMIT}"),
                });
            }
            true
        }
        PrivacyMode::Auto { .. } => total <= EXHAUSTIVE_SUBSET_LIMIT as u128,
        PrivacyMode::Sampled { .. } => false,
    };
    let mut checked = 0u64;
    if exhaustive {
        let mut subset: Vec<usize> = (0..t).collect();
        loop {
            checked += 1;
            if !independent(&subset) {
                return Ok(PrivacyVerdict { passed: false, t, exhaustive, subsets_checked: checked, witness: Some(subset) });
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    } else {
        let trials = match mode {
            PrivacyMode::Auto { trials } | PrivacyMode::Sampled { trials } => trials,
            PrivacyMode::Exhaustive => unreachable!(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let mut subset = index::sample(&mut rng, n, t).into_vec();
            subset.sort_unstable();
            checked += 1;
            if !independent(&subset) {
                return Ok(PrivacyVerdict { passed: false, t, exhaustive, subsets_checked: checked, witness: Some(subset) });
            }
        }
    }
    Ok(PrivacyVerdict { passed: true, t, exhaustive, subsets_checked: checked, witness: None })
}

/// Advances to the next t-subset of 0..n in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let t = c.len();
    let Some(i) = (0..t).rev().find(|&i| c[i] < n - t + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..t {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Multiset of what the servers in `servers` jointly see, over every choice
/// of the D-messages. Exponential in k_D times the row count.
pub fn query_view_multiset(
    setup: &ProtocolSetup,
    total_rows: usize,
    target_row: usize,
    s: &[usize],
    servers: &[usize],
) -> Result<BTreeMap<Vec<Vec<u32>>, u64>> {
    let (q, kd) = (setup.q() as u64, setup.gd.k());
    let digits = kd * total_rows;
    let count = q.checked_pow(digits as u32).filter(|&c| c <= 1 << 24).ok_or(Error::Budget {
        what: "query view enumeration",
        detail: format!("{q}^{digits} randomness values"),
    })?;
    let mut views = BTreeMap::new();
    for mut x in 0..count {
        let messages: Vec<Vec<u32>> = (0..total_rows)
            .map(|_| {
                (0..kd)
                    .map(|_| {
                        let d = (x % q) as u32;
                        x /= q;
                        d
                    })
                    .collect()
            })
            .collect();
        let queries = make_queries_from_messages(setup, &messages, target_row, s)?;
        let view: Vec<Vec<u32>> = servers.iter().map(|&j| queries[j].vector.clone()).collect();
        *views.entry(view).or_insert(0) += 1;
    }
    Ok(views)
}

/// Distinct coordinates covered by a schedule.
pub fn covered_coordinates(schedule: &Schedule) -> BTreeSet<usize> {
    schedule.sets.iter().flatten().copied().collect()
}
