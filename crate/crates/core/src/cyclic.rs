//! Cyclic codes described by their generating sets in Z/nZ.
//!
//! A cyclic code of length n over GF(q), gcd(n, q) = 1, is determined by its
//! generating set I (exponents j with g(alpha^j) != 0), a union of q-cyclotomic
//! cosets. The defining set J is the complement. Dimension is |I|, the dual has
//! generating set -J, and the star product of two cyclic codes has generating
//! set I1 + I2 (Minkowski sum).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{minimal_polynomial, BasePolynomial, FieldSpec};
use crate::linalg::Matrix;
use crate::modp;

/// Subset of Z/nZ stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSet {
    n: u32,
    words: Vec<u64>,
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl ResidueSet {
    pub fn empty(n: u32) -> Self {
        Self { n, words: vec![0; (n as usize).div_ceil(64)] }
    }

    pub fn full(n: u32) -> Self {
        let mut s = Self::empty(n);
        s.words.iter_mut().for_each(|w| *w = u64::MAX);
        s.trim();
        s
    }

    pub fn from_residues(n: u32, residues: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::empty(n);
        for r in residues {
            s.insert(r);
        }
        s
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        let i = i % self.n;
        (self.words[(i / 64) as usize] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: u32) {
        let i = i % self.n;
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(wi as u32 * 64 + b)
            })
        })
    }

    pub fn complement(&self) -> Self {
        let mut s = Self { n: self.n, words: self.words.iter().map(|w| !w).collect() };
        s.trim();
        s
    }

    /// { -i mod n : i in self }
    pub fn negated(&self) -> Self {
        Self::from_residues(self.n, self.iter().map(|i| (self.n - i) % self.n))
    }

    /// { u * i mod n : i in self }
    pub fn scaled(&self, u: u32) -> Self {
        let n = self.n as u64;
        Self::from_residues(self.n, self.iter().map(|i| ((i as u64 * u as u64) % n) as u32))
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { n: self.n, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self { n: self.n, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self { n: self.n, words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// { i + k mod n : i in self }
    pub fn rotated(&self, k: u32) -> Self {
        let k = k % self.n;
        if k == 0 {
            return self.clone();
        }
        let left = shift_left(&self.words, k as usize);
        let right = shift_right(&self.words, (self.n - k) as usize);
        let mut s = Self { n: self.n, words: left.iter().zip(&right).map(|(a, b)| a | b).collect() };
        s.trim();
        s
    }

    /// Minkowski sum { a + b mod n }, accumulated as shifted copies of `other`.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let mut acc = Self::empty(self.n);
        for i in self.iter() {
            let shifted = other.rotated(i);
            acc.words.iter_mut().zip(&shifted.words).for_each(|(a, b)| *a |= b);
        }
        acc
    }

    /// Length of the longest run of cyclically consecutive residues in the set.
    pub fn longest_cyclic_run(&self) -> usize {
        let n = self.n as usize;
        if self.len() == n {
            return n;
        }
        let start = (0..self.n).find(|&i| !self.contains(i)).expect("set is not full");
        let (mut best, mut cur) = (0, 0);
        // one period starting at a gap covers every wrapping run
        for off in 1..=self.n {
            if self.contains((start + off) % self.n) {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.n as usize;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

fn shift_left(words: &[u64], k: usize) -> Vec<u64> {
    let (ws, bs) = (k / 64, k % 64);
    let mut out = vec![0u64; words.len()];
    for i in ws..words.len() {
        out[i] = words[i - ws] << bs;
        if bs > 0 && i > ws {
            out[i] |= words[i - ws - 1] >> (64 - bs);
        }
    }
    out
}

fn shift_right(words: &[u64], k: usize) -> Vec<u64> {
    let (ws, bs) = (k / 64, k % 64);
    let mut out = vec![0u64; words.len()];
    for i in 0..words.len().saturating_sub(ws) {
        out[i] = words[i + ws] >> bs;
        if bs > 0 && i + ws + 1 < words.len() {
            out[i] |= words[i + ws + 1] << (64 - bs);
        }
    }
    out
}

fn check_coprime(n: u32, q: u32) -> Result<()> {
    if n == 0 || q < 2 || n.gcd(&q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

/// The q-cyclotomic coset of `s` modulo n, sorted ascending.
pub fn cyclotomic_coset(s: u32, n: u32, q: u32) -> Result<Vec<u32>> {
    check_coprime(n, q)?;
    let mut out = Vec::new();
    let mut x = s % n;
    loop {
        out.push(x);
        x = ((x as u64 * q as u64) % n as u64) as u32;
        if x == s % n {
            break;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Minimal representatives of all q-cyclotomic cosets mod n, ascending.
pub fn coset_representatives(n: u32, q: u32) -> Result<Vec<u32>> {
    check_coprime(n, q)?;
    let mut seen = ResidueSet::empty(n);
    let mut reps = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        reps.push(s);
        for x in cyclotomic_coset(s, n, q)? {
            seen.insert(x);
        }
    }
    Ok(reps)
}

/// Union of the cosets of the given representatives.
pub fn coset_union(reps: &[u32], n: u32, q: u32) -> Result<ResidueSet> {
    check_coprime(n, q)?;
    let mut set = ResidueSet::empty(n);
    for &r in reps {
        for x in cyclotomic_coset(r, n, q)? {
            set.insert(x);
        }
    }
    Ok(set)
}

/// Canonical minimal representatives of the cosets making up a q-closed set.
pub fn canonical_cosets(set: &ResidueSet, q: u32) -> Vec<u32> {
    let n = set.modulus();
    let mut seen = ResidueSet::empty(n);
    let mut reps = Vec::new();
    for s in set.iter() {
        if seen.contains(s) {
            continue;
        }
        let coset = cyclotomic_coset(s, n, q).expect("validated modulus");
        reps.push(coset[0]);
        for x in coset {
            seen.insert(x);
        }
    }
    reps.sort_unstable();
    reps
}

/// Whether the coset list is read as the generating or the defining set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CosetRole {
    #[default]
    Generating,
    Defining,
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "CodeSpecRepr", try_from = "CodeSpecRepr")]
pub struct CyclicCodeSpec {
    q: u32,
    n: u32,
    generating: ResidueSet,
    defining: ResidueSet,
}

#[derive(Serialize, Deserialize)]
struct CodeSpecRepr {
    q: u32,
    n: u32,
    k: usize,
    cosets: Vec<u32>,
}

impl From<CyclicCodeSpec> for CodeSpecRepr {
    fn from(c: CyclicCodeSpec) -> Self {
        Self { q: c.q, n: c.n, k: c.dim(), cosets: c.cosets() }
    }
}

impl TryFrom<CodeSpecRepr> for CyclicCodeSpec {
    type Error = Error;

    fn try_from(r: CodeSpecRepr) -> Result<Self> {
        let c = code_from_cosets(&r.cosets, r.n, r.q)?;
        if c.dim() != r.k {
            return Err(Error::Dimension(format!("cosets give dimension {}, record says {}", c.dim(), r.k)));
        }
        Ok(c)
    }
}

impl fmt::Debug for CyclicCodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicCodeSpec({self}, k={})", self.dim())
    }
}

impl fmt::Display for CyclicCodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reps: Vec<String> = self.cosets().iter().map(u32::to_string).collect();
        write!(f, "q={} n={} cosets={}", self.q, self.n, reps.join(","))
    }
}

/// Code whose generating set is the union of the cosets of `reps`.
pub fn code_from_cosets(reps: &[u32], n: u32, q: u32) -> Result<CyclicCodeSpec> {
    CyclicCodeSpec::from_generating_set(q, coset_union(reps, n, q)?)
}

impl CyclicCodeSpec {
    /// Code with generating set `generating`; the set must be closed under i -> q*i.
    pub fn from_generating_set(q: u32, generating: ResidueSet) -> Result<Self> {
        let n = generating.modulus();
        check_coprime(n, q)?;
        if !modp::is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if generating.scaled(q) != generating {
            return Err(Error::NotClosed { n, q });
        }
        let defining = generating.complement();
        Ok(Self { q, n, generating, defining })
    }

    pub fn from_defining_set(q: u32, defining: ResidueSet) -> Result<Self> {
        Self::from_generating_set(q, defining.complement())
    }

    pub fn from_defining_cosets(reps: &[u32], n: u32, q: u32) -> Result<Self> {
        Self::from_defining_set(q, coset_union(reps, n, q)?)
    }

    pub fn zero(q: u32, n: u32) -> Result<Self> {
        Self::from_generating_set(q, ResidueSet::empty(n))
    }

    pub fn whole_space(q: u32, n: u32) -> Result<Self> {
        Self::from_generating_set(q, ResidueSet::full(n))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.generating.len()
    }

    pub fn generating_set(&self) -> &ResidueSet {
        &self.generating
    }

    pub fn defining_set(&self) -> &ResidueSet {
        &self.defining
    }

    /// Canonical (minimal) representatives of the cosets in the generating set.
    pub fn cosets(&self) -> Vec<u32> {
        canonical_cosets(&self.generating, self.q)
    }

    pub fn defining_cosets(&self) -> Vec<u32> {
        canonical_cosets(&self.defining, self.q)
    }

    /// Dual code: generating set -J, defining set -I.
    pub fn dual(&self) -> Self {
        let generating = self.defining.negated();
        let defining = generating.complement();
        Self { q: self.q, n: self.n, generating, defining }
    }

    /// Star (Schur) product: generating set I1 + I2.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let generating = self.generating.minkowski_sum(&other.generating);
        if generating.scaled(self.q) != generating {
            return Err(Error::Internal("Minkowski sum of q-closed sets is not q-closed".into()));
        }
        let defining = generating.complement();
        Ok(Self { q: self.q, n: self.n, generating, defining })
    }

    /// BCH bound: one more than the longest cyclic run of consecutive residues in J.
    pub fn bch_bound(&self) -> usize {
        self.defining.longest_cyclic_run() + 1
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.q == other.q && self.n == other.n && self.generating.is_subset(&other.generating)
    }

    /// The field hosting the n-th roots of unity for this code.
    pub fn default_field(&self) -> Result<FieldSpec> {
        FieldSpec::for_length(self.q, self.n)
    }

    /// g(x): product of the minimal polynomials of the cosets in J.
    pub fn generator_polynomial(&self, field: &FieldSpec) -> Result<BasePolynomial> {
        if field.characteristic() != self.q {
            return Err(Error::MixedFields);
        }
        if field.group_order() % self.n != 0 {
            return Err(Error::LengthDoesNotDivide { n: self.n, order: field.group_order() });
        }
        let mut g = BasePolynomial::one(self.q);
        for rep in self.defining_cosets() {
            let coset = cyclotomic_coset(rep, self.n, self.q)?;
            g = g.mul(&minimal_polynomial(&coset, field, self.n)?);
        }
        Ok(g)
    }

    /// Shift basis g, xg, ..., x^(k-1) g.
    pub fn generator_matrix(&self, field: &FieldSpec) -> Result<LinearCode> {
        let g = self.generator_polynomial(field)?;
        let (n, k) = (self.n as usize, self.dim());
        let mut m = Matrix::zeros(self.q, k, n);
        for r in 0..k {
            for (j, &c) in g.coefficients().iter().enumerate() {
                m.set(r, (r + j) % n, c);
            }
        }
        LinearCode::new(m)
    }

    /// Generator matrix over the smallest splitting field.
    pub fn linear_code(&self) -> Result<LinearCode> {
        self.generator_matrix(&self.default_field()?)
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.q != other.q || self.n != other.n {
            return Err(Error::Mismatch { q1: self.q, n1: self.n, q2: other.q, n2: other.n });
        }
        Ok(())
    }
}

pub fn dual_code(c: &CyclicCodeSpec) -> CyclicCodeSpec {
    c.dual()
}

pub fn star_product(c1: &CyclicCodeSpec, c2: &CyclicCodeSpec) -> Result<CyclicCodeSpec> {
    c1.star(c2)
}

pub fn bch_bound(c: &CyclicCodeSpec) -> usize {
    c.bch_bound()
}

impl FromStr for CyclicCodeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_code_spec(s, CosetRole::Generating)
    }
}

/// Parses `q=<int> n=<int> cosets=<r1,r2,...>`; whitespace is ignored.
pub fn parse_code_spec(input: &str, role: CosetRole) -> Result<CyclicCodeSpec> {
    let mut sc = Scanner { src: input.as_bytes(), pos: 0 };
    let (mut q, mut n, mut cosets) = (None, None, None);
    loop {
        sc.skip_ws();
        if sc.at_end() {
            break;
        }
        let key_pos = sc.pos;
        let key = sc.ident();
        if key.is_empty() {
            return Err(sc.error("expected a key (q, n or cosets)"));
        }
        sc.skip_ws();
        sc.expect(b'=')?;
        match key.as_str() {
            "q" if q.is_none() => q = Some((key_pos, sc.integer()?)),
            "n" if n.is_none() => n = Some((key_pos, sc.integer()?)),
            "cosets" if cosets.is_none() => cosets = Some(sc.integer_list()?),
            "q" | "n" | "cosets" => return Err(Error::Parse { position: key_pos, message: format!("duplicate key '{key}'") }),
            _ => return Err(Error::Parse { position: key_pos, message: format!("unknown key '{key}'") }),
        }
    }
    let end = input.len();
    let missing = |k: &str| Error::Parse { position: end, message: format!("missing '{k}='") };
    let (q_pos, q) = q.ok_or_else(|| missing("q"))?;
    let (n_pos, n) = n.ok_or_else(|| missing("n"))?;
    let cosets = cosets.ok_or_else(|| missing("cosets"))?;
    if !modp::is_prime(q) {
        return Err(Error::Parse { position: q_pos, message: format!("q={q} is not a prime") });
    }
    if n == 0 || n.gcd(&q) != 1 {
        return Err(Error::Parse { position: n_pos, message: format!("n={n} must be positive and coprime to q={q}") });
    }
    match role {
        CosetRole::Generating => code_from_cosets(&cosets, n, q),
        CosetRole::Defining => CyclicCodeSpec::from_defining_cosets(&cosets, n, q),
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse { position: start, message: "integer out of range".into() })
    }

    fn integer_list(&mut self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        self.skip_ws();
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            // empty list
            return Ok(out);
        }
        loop {
            out.push(self.integer()?);
            self.skip_ws();
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::weight;

    #[test]
    fn cosets_mod_31_and_63() {
        assert_eq!(cyclotomic_coset(1, 31, 2).unwrap(), vec![1, 2, 4, 8, 16]);
        assert_eq!(cyclotomic_coset(3, 31, 2).unwrap(), vec![3, 6, 12, 17, 24]);
        assert_eq!(cyclotomic_coset(0, 31, 2).unwrap(), vec![0]);
        assert_eq!(cyclotomic_coset(21, 63, 2).unwrap(), vec![21, 42]);
        assert!(matches!(cyclotomic_coset(1, 10, 2), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn representatives() {
        assert_eq!(coset_representatives(7, 2).unwrap(), vec![0, 1, 3]);
        assert_eq!(&coset_representatives(31, 2).unwrap()[..3], &[0, 1, 3]);
        assert_eq!(coset_representatives(1, 2).unwrap(), vec![0]);
        let reps = coset_representatives(127, 2).unwrap();
        assert_eq!(reps.len(), 19);
    }

    #[test]
    fn dimensions_from_cosets() {
        assert_eq!(code_from_cosets(&[0, 31], 127, 2).unwrap().dim(), 8);
        assert_eq!(code_from_cosets(&[0, 5, 23, 27, 31], 127, 2).unwrap().dim(), 29);
        assert_eq!(code_from_cosets(&[], 127, 2).unwrap().dim(), 0);
        assert_eq!(code_from_cosets(&[1, 1, 2], 7, 2).unwrap().dim(), 3);
    }

    #[test]
    fn duals() {
        let ham = code_from_cosets(&[0, 1], 7, 2).unwrap();
        let d = ham.dual();
        assert_eq!(d.generating_set().iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(d.dual(), ham);
        let whole = CyclicCodeSpec::whole_space(2, 7).unwrap();
        assert!(whole.dual().generating_set().is_empty());
        let dcode = code_from_cosets(&[0, 5, 23, 27, 31], 127, 2).unwrap();
        assert_eq!(dcode.dual().dim(), 98);
        // defining set of the dual is exactly -I
        assert_eq!(dcode.dual().defining_set(), &dcode.generating_set().negated());
    }

    #[test]
    fn star_products() {
        let c = code_from_cosets(&[0, 31], 127, 2).unwrap();
        let d = code_from_cosets(&[0, 5, 23, 27, 31], 127, 2).unwrap();
        let s = c.star(&d).unwrap();
        assert_eq!(s.dim(), 113);
        assert_eq!(s.defining_cosets(), vec![13, 47]);
        let zero_only = code_from_cosets(&[0], 7, 2).unwrap();
        let ham = code_from_cosets(&[0, 1], 7, 2).unwrap();
        assert_eq!(zero_only.star(&ham).unwrap(), ham);
        let other = code_from_cosets(&[0], 15, 2).unwrap();
        assert!(matches!(ham.star(&other), Err(Error::Mismatch { .. })));
    }

    #[test]
    fn bch_bounds() {
        let c = CyclicCodeSpec::from_defining_cosets(&[0, 1, 3], 31, 2).unwrap();
        assert_eq!(c.dim(), 20);
        assert_eq!(c.bch_bound(), 6);
        assert_eq!(CyclicCodeSpec::whole_space(2, 31).unwrap().bch_bound(), 1);
        let ham = code_from_cosets(&[0, 1], 7, 2).unwrap();
        assert_eq!(ham.defining_set().iter().collect::<Vec<_>>(), vec![3, 5, 6]);
        assert_eq!(ham.bch_bound(), 3);
        // wrapping run {126, 0, 1, 2}
        let wrap = ResidueSet::from_residues(127, [126, 0, 1, 2, 5]);
        assert_eq!(wrap.longest_cyclic_run(), 4);
    }

    #[test]
    fn generator_polynomials() {
        let c = CyclicCodeSpec::from_defining_cosets(&[0, 1, 3], 31, 2).unwrap();
        let f = c.default_field().unwrap();
        let g = c.generator_polynomial(&f).unwrap();
        assert_eq!(g.degree(), Some(11));
        assert!(g.divides(&BasePolynomial::x_n_minus_one(2, 31)));
        let whole = CyclicCodeSpec::whole_space(2, 7).unwrap();
        assert!(matches!(whole.generator_polynomial(&f), Err(Error::LengthDoesNotDivide { n: 7, order: 31 })));
        let f8 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(whole.generator_polynomial(&f8).unwrap(), BasePolynomial::one(2));
        let j1 = CyclicCodeSpec::from_defining_cosets(&[1], 7, 2).unwrap();
        assert_eq!(j1.generator_polynomial(&f8).unwrap().to_string(), "x^3 + x + 1");
    }

    #[test]
    fn generator_matrices() {
        let rep = code_from_cosets(&[0], 7, 2).unwrap().linear_code().unwrap();
        assert_eq!(rep.generator().row_vectors(), vec![vec![1; 7]]);
        let ham = code_from_cosets(&[0, 1], 7, 2).unwrap().linear_code().unwrap();
        assert_eq!((ham.k(), ham.generator().rank()), (4, 4));
        let big = code_from_cosets(&[0, 31], 127, 2).unwrap().linear_code().unwrap();
        assert_eq!((big.k(), big.n(), big.generator().rank()), (8, 127, 8));
    }

    #[test]
    fn row_space_is_cyclic() {
        let c = code_from_cosets(&[0, 3], 15, 2).unwrap().linear_code().unwrap();
        for r in c.generator().row_vectors() {
            let mut shifted = r.clone();
            shifted.rotate_right(1);
            assert!(c.contains(&shifted));
        }
    }

    #[test]
    fn ternary_code() {
        // n = 13 over GF(3): cosets of size 3
        let c = code_from_cosets(&[0, 1], 13, 3).unwrap();
        assert_eq!(c.dim(), 4);
        let g = c.linear_code().unwrap();
        let h = c.dual().linear_code().unwrap();
        assert!(g.generator().mul(&h.generator().transpose()).unwrap().is_zero());
        assert!(g.codewords().iter().filter(|w| weight(w) > 0).all(|w| weight(w) >= c.bch_bound()));
    }

    #[test]
    fn parse_and_display() {
        let c: CyclicCodeSpec = "q=2 n=31 cosets=3,1,0".parse().unwrap();
        assert_eq!(c.to_string(), "q=2 n=31 cosets=0,1,3");
        let d: CyclicCodeSpec = " q = 2\tn=31   cosets = 0 , 1 ,3 ".parse().unwrap();
        assert_eq!(c, d);
        let j = parse_code_spec("q=2 n=31 cosets=0,1,3", CosetRole::Defining).unwrap();
        assert_eq!(j.dim(), 20);
        let empty: CyclicCodeSpec = "q=2 n=7 cosets=".parse().unwrap();
        assert_eq!(empty.dim(), 0);
        // canonical reps: 62 belongs to U_31 mod 127
        let c: CyclicCodeSpec = "q=2 n=127 cosets=62,0".parse().unwrap();
        assert_eq!(c.cosets(), vec![0, 31]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = "q=2 n=31 cosets=0,x".parse::<CyclicCodeSpec>().unwrap_err();
        assert_eq!(err, Error::Parse { position: 18, message: "expected an integer".into() });
        let err = "q=2 n=31 cosets=0 7".parse::<CyclicCodeSpec>().unwrap_err();
        assert_eq!(err, Error::Parse { position: 18, message: "expected a key (q, n or cosets)".into() });
        let err = "q=2 m=31 cosets=0".parse::<CyclicCodeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { position: 4, .. }));
        let err = "q=2 cosets=0".parse::<CyclicCodeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { position: 12, .. }));
        let err = "q=4 n=31 cosets=0".parse::<CyclicCodeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { position: 0, .. }));
        let err = "q=2 n=30 cosets=0".parse::<CyclicCodeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { position: 4, .. }));
    }

    #[test]
    fn serde_round_trip() {
        let c = code_from_cosets(&[0, 5, 23, 27, 31], 127, 2).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"q":2,"n":127,"k":29,"cosets":[0,5,23,27,31]}"#);
        let back: CyclicCodeSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rotation_matches_naive() {
        for n in [7u32, 63, 64, 65, 127, 200] {
            let set = ResidueSet::from_residues(n, (0..n).filter(|i| i % 3 == 0 || i % 7 == 1));
            for k in [0, 1, 5, 63, 64, n - 1] {
                let naive = ResidueSet::from_residues(n, set.iter().map(|i| (i + k) % n));
                assert_eq!(set.rotated(k), naive, "n={n} k={k}");
            }
        }
    }
}
