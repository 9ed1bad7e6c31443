//! Exhaustive search over coset-union pairs (C, D) for good PIR parameters.
//!
//! Candidates are unions of at most `max_c_cosets` / `max_d_cosets` cosets
//! from a pool. Pairs are pruned on the star-product dimension and, when a
//! privacy target is set, on the BCH bound of D^perp; surviving retrieval
//! codes get a full distance report.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use num_integer::Integer;

use crate::cyclic::{code_from_cosets, coset_representatives, CyclicCodeSpec, ResidueSet};
use crate::distance::{DistanceEngine, DistanceOptions, DistanceReport};
use crate::error::{Error, Result};
use crate::scheme::{PirParameters, Privacy, Rate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "objective", rename_all = "kebab-case")]
pub enum Objective {
    /// Largest privacy among pairs with rate >= `min_rate`.
    MaxPrivacy { min_rate: Rate, min_privacy: Option<usize> },
    /// Largest rate among pairs with guaranteed privacy >= `min_privacy`.
    MaxRate { min_privacy: usize },
}

impl Objective {
    fn privacy_target(&self) -> Option<usize> {
        match *self {
            Objective::MaxPrivacy { min_privacy, .. } => min_privacy,
            Objective::MaxRate { min_privacy } => Some(min_privacy),
        }
    }

    fn min_rate(&self) -> Option<Rate> {
        match *self {
            Objective::MaxPrivacy { min_rate, .. } => Some(min_rate),
            Objective::MaxRate { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub n: u32,
    pub q: u32,
    /// Minimal coset representatives the codes are built from.
    pub pool: Vec<u32>,
    pub max_c_cosets: usize,
    pub max_d_cosets: usize,
    /// Storage code fixed by its coset representatives; only D is searched.
    pub fixed_c: Option<Vec<u32>>,
    pub objective: Objective,
    pub distance: DistanceOptions,
    pub time_limit: Option<Duration>,
}

impl SearchSpec {
    /// Full pool, caps 2 / 5, default distance options, no time limit.
    pub fn new(n: u32, q: u32, objective: Objective) -> Result<Self> {
        Ok(Self {
            n,
            q,
            pool: coset_representatives(n, q)?,
            max_c_cosets: 2,
            max_d_cosets: 5,
            fixed_c: None,
            objective,
            distance: DistanceOptions::default(),
            time_limit: None,
        })
    }

    fn validate(&self) -> Result<Vec<u32>> {
        let reps = coset_representatives(self.n, self.q)?;
        let mut pool = self.pool.clone();
        pool.sort_unstable();
        pool.dedup();
        if let Some(&bad) = pool.iter().find(|r| reps.binary_search(r).is_err()) {
            return Err(Error::Dimension(format!("{bad} is not a minimal coset representative mod {}", self.n)));
        }
        if let Some(rate) = self.objective.min_rate() {
            if rate.den == 0 || rate.num > rate.den {
                return Err(Error::Dimension(format!("rate threshold {rate} is not in [0, 1]")));
            }
        }
        self.distance.check()?;
        Ok(pool)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    #[serde(rename = "C")]
    pub c: CyclicCodeSpec,
    #[serde(rename = "D")]
    pub d: CyclicCodeSpec,
    pub params: PirParameters,
    /// Not dominated in (guaranteed privacy, rate) by another hit.
    pub pareto: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub storage_candidates: usize,
    pub retrieval_candidates: usize,
    pub pruned_bch: usize,
    pub pairs_considered: usize,
    pub pruned_dimension: usize,
    pub distance_reports: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchResult {
    pub hits: Vec<SearchHit>,
    /// Set when the time limit cut the distance phase short.
    pub partial: bool,
    pub stats: SearchStats,
}

/// All non-empty subsets of `pool` with at most `cap` elements, in
/// lexicographic order.
fn subsets(pool: &[u32], cap: usize) -> Vec<Vec<u32>> {
    fn grow(pool: &[u32], start: usize, cap: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        for i in start..pool.len() {
            cur.push(pool[i]);
            out.push(cur.clone());
            if cur.len() < cap {
                grow(pool, i + 1, cap, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(pool, 0, cap, &mut Vec::new(), &mut out);
    out
}

fn units_mod(n: u32) -> Vec<u32> {
    (1..n.max(2)).filter(|a| a.gcd(&n) == 1).collect()
}

/// Smallest image of `set` under the multipliers i -> a*i, as a sorted list.
fn multiplier_canonical(set: &ResidueSet, units: &[u32]) -> Vec<u32> {
    units
        .iter()
        .map(|&a| {
            let mut v: Vec<u32> = set.scaled(a).iter().collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
}

fn rate_at_least(u: usize, n: usize, min: Rate) -> bool {
    u as u128 * min.den as u128 >= min.num as u128 * n as u128
}

fn rank_order(objective: &Objective, a: &SearchHit, b: &SearchHit) -> Ordering {
    let privacy = b.params.privacy.lo.cmp(&a.params.privacy.lo);
    let rate = b.params.rate.ratio().cmp(&a.params.rate.ratio());
    let primary = match objective {
        Objective::MaxPrivacy { .. } => privacy.then(rate),
        Objective::MaxRate { .. } => rate.then(privacy),
    };
    primary.then_with(|| a.c.cosets().cmp(&b.c.cosets())).then_with(|| a.d.cosets().cmp(&b.d.cosets()))
}

fn mark_pareto(hits: &mut [SearchHit]) {
    let mut by_privacy: BTreeMap<usize, num_rational::Ratio<u64>> = BTreeMap::new();
    for h in hits.iter() {
        let r = h.params.rate.ratio();
        by_privacy.entry(h.params.privacy.lo).and_modify(|m| *m = (*m).max(r)).or_insert(r);
    }
    // Best rate among strictly more private groups, scanning from the top.
    let mut better: BTreeMap<usize, Option<num_rational::Ratio<u64>>> = BTreeMap::new();
    let mut best: Option<num_rational::Ratio<u64>> = None;
    for (&t, &r) in by_privacy.iter().rev() {
        better.insert(t, best);
        best = Some(best.map_or(r, |b| b.max(r)));
    }
    for h in hits.iter_mut() {
        let r = h.params.rate.ratio();
        let t = h.params.privacy.lo;
        h.pareto = r == by_privacy[&t] && better[&t].is_none_or(|b| r > b);
    }
}

/// Enumerate, prune, evaluate and rank coset-union pairs.
pub fn search_pir_codes(spec: &SearchSpec) -> Result<SearchResult> {
    let pool = spec.validate()?;
    let (n, q) = (spec.n, spec.q);
    let mut stats = SearchStats::default();
    if pool.is_empty() {
        return Ok(SearchResult::default());
    }
    let started = Instant::now();

    let storage: Vec<CyclicCodeSpec> = match &spec.fixed_c {
        Some(reps) => vec![code_from_cosets(reps, n, q)?],
        None => subsets(&pool, spec.max_c_cosets).iter().map(|s| code_from_cosets(s, n, q)).collect::<Result<_>>()?,
    };
    stats.storage_candidates = storage.len();

    let target = spec.objective.privacy_target();
    let mut retrieval = Vec::new();
    for s in subsets(&pool, spec.max_d_cosets) {
        let d = code_from_cosets(&s, n, q)?;
        stats.retrieval_candidates += 1;
        if target.is_some_and(|t| d.dual().bch_bound() < t + 1) {
            stats.pruned_bch += 1;
            continue;
        }
        retrieval.push(d);
    }

    let min_rate = spec.objective.min_rate();
    let nn = n as usize;
    let pairs: Vec<(usize, usize, usize)> = storage
        .par_iter()
        .enumerate()
        .flat_map_iter(|(ci, c)| {
            retrieval.iter().enumerate().filter_map(move |(di, d)| {
                let star = c.generating_set().minkowski_sum(d.generating_set()).len();
                let u = nn - star;
                (u > 0 && min_rate.is_none_or(|m| rate_at_least(u, nn, m))).then_some((ci, di, star))
            })
        })
        .collect();
    stats.pairs_considered = storage.len() * retrieval.len();
    stats.pruned_dimension = stats.pairs_considered - pairs.len();

    // d(D^perp) is computed once per multiplier orbit of D.
    let units = units_mod(n);
    let mut class_of = vec![usize::MAX; retrieval.len()];
    let mut classes: Vec<CyclicCodeSpec> = Vec::new();
    let mut class_index: HashMap<Vec<u32>, usize> = HashMap::new();
    for &(_, di, _) in &pairs {
        if class_of[di] != usize::MAX {
            continue;
        }
        let key = multiplier_canonical(retrieval[di].generating_set(), &units);
        class_of[di] = *class_index.entry(key.clone()).or_insert_with(|| {
            classes.push(CyclicCodeSpec::from_generating_set(q, ResidueSet::from_residues(n, key)).expect("multipliers preserve q-closure"));
            classes.len() - 1
        });
    }
    let engine = DistanceEngine::new(spec.distance)?;
    let timed_out = AtomicBool::new(false);
    let class_reports: Vec<Option<DistanceReport>> = classes
        .par_iter()
        .map(|d| {
            if spec.time_limit.is_some_and(|lim| started.elapsed() > lim) {
                timed_out.store(true, AtomicOrdering::Relaxed);
                return Ok(None);
            }
            engine.report(&d.dual()).map(Some)
        })
        .collect::<Result<_>>()?;
    stats.distance_reports = class_reports.iter().filter(|r| r.is_some()).count();
    let reports: Vec<Option<DistanceReport>> =
        class_of.iter().map(|&c| if c == usize::MAX { None } else { class_reports[c].clone() }).collect();

    let mut hits: Vec<SearchHit> = pairs
        .into_iter()
        .filter_map(|(ci, di, star)| {
            let ddual = reports[di].clone()?;
            let privacy = Privacy::from_report(&ddual, nn);
            if target.is_some_and(|t| privacy.lo < t) {
                return None;
            }
            let u = nn - star;
            let params = PirParameters {
                n: nn,
                q,
                privacy,
                retrieved_per_round: u,
                rate: Rate::new(u as u64, nn as u64),
                ddual,
                star_dim: star,
            };
            Some(SearchHit { c: storage[ci].clone(), d: retrieval[di].clone(), params, pareto: false })
        })
        .collect();
    hits.par_sort_by(|a, b| rank_order(&spec.objective, a, b));
    mark_pareto(&mut hits);
    Ok(SearchResult { hits, partial: timed_out.into_inner(), stats })
}
