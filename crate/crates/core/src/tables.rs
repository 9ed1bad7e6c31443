//! Published parameter tables as fixtures, and their recomputation.
//!
//! Each fixture row keeps its coset lists exactly as printed (including
//! complement notation); the printed cells are compared against recomputed
//! values cell by cell. Disagreements are reported, never raised as errors.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::{coset_union, CyclicCodeSpec, ResidueSet};
use crate::distance::{self, DistanceEngine, DistanceOptions, DistanceReport};
use crate::error::{Error, Result};
use crate::scheme::{scheme_row, Privacy, SchemeRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableId {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4")]
    Four,
    #[serde(rename = "5")]
    Five,
    #[serde(rename = "7")]
    Seven,
}

impl TableId {
    pub const ALL: [TableId; 5] = [TableId::One, TableId::Three, TableId::Four, TableId::Five, TableId::Seven];

    pub fn number(self) -> u32 {
        match self {
            TableId::One => 1,
            TableId::Three => 3,
            TableId::Four => 4,
            TableId::Five => 5,
            TableId::Seven => 7,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(TableId::One),
            "3" => Ok(TableId::Three),
            "4" => Ok(TableId::Four),
            "5" => Ok(TableId::Five),
            "7" => Ok(TableId::Seven),
            other => Err(Error::Parse { position: 0, message: format!("unknown table '{other}', expected 1, 3, 4, 5 or 7") }),
        }
    }
}

/// A coset list as printed: a plain union, or the complement `V \ (U_...)`
/// of one inside the set V of all cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", content = "reps", rename_all = "kebab-case")]
pub enum CosetList {
    Union(&'static [u32]),
    Complement(&'static [u32]),
}

impl CosetList {
    pub fn generating_set(&self, n: u32, q: u32) -> Result<ResidueSet> {
        Ok(match *self {
            CosetList::Union(reps) => coset_union(reps, n, q)?,
            CosetList::Complement(reps) => coset_union(reps, n, q)?.complement(),
        })
    }

    pub fn code(&self, n: u32, q: u32) -> Result<CyclicCodeSpec> {
        CyclicCodeSpec::from_generating_set(q, self.generating_set(n, q)?)
    }
}

impl fmt::Display for CosetList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            CosetList::Union(r) => write!(f, "U{{{}}}", join(r)),
            CosetList::Complement(r) => write!(f, "V \\ U{{{}}}", join(r)),
        }
    }
}

/// A printed minimum-distance entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PrintedDistance {
    Exact { d: usize },
    AtLeast { d: usize },
    /// "a+b": BCH bound a, true distance a + b.
    BchPlus { bch: usize, extra: usize },
    Absent,
}

impl fmt::Display for PrintedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrintedDistance::Exact { d } => write!(f, "{d}"),
            PrintedDistance::AtLeast { d } => write!(f, ">={d}"),
            PrintedDistance::BchPlus { bch, extra } => write!(f, "{bch}+{extra}"),
            PrintedDistance::Absent => write!(f, "-"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedCode {
    pub k: usize,
    pub d: PrintedDistance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PrintedPrivacy {
    Exact { t: usize },
    AtLeast { t: usize },
}

impl fmt::Display for PrintedPrivacy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrintedPrivacy::Exact { t } => write!(f, "{t}"),
            PrintedPrivacy::AtLeast { t } => write!(f, ">={t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStyle {
    Plain,
    Bold,
    /// Shaded rows: Reed-Muller equivalents.
    Shaded,
}

/// A reading that replaces printed data, with the evidence for it.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Erratum {
    StorageCosets { reps: &'static [u32], note: &'static str },
    RetrievalCosets { reps: &'static [u32], note: &'static str },
    /// Replacement for the printed code in column `column` (index into [`COLUMN_NAMES`]).
    Cell { column: usize, reading: PrintedCode, note: &'static str },
}

impl Erratum {
    pub fn note(&self) -> &'static str {
        match *self {
            Erratum::StorageCosets { note, .. } | Erratum::RetrievalCosets { note, .. } | Erratum::Cell { note, .. } => note,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureRow {
    pub style: RowStyle,
    pub c: CosetList,
    pub d: CosetList,
    /// Printed C, D, D^perp, C*D, (C*D)^perp; `None` where the column is absent.
    pub columns: [Option<PrintedCode>; 5],
    pub privacy: PrintedPrivacy,
    pub rate: (u64, u64),
    pub errata: Vec<Erratum>,
    pub notes: Vec<&'static str>,
}

impl FixtureRow {
    /// Storage and retrieval codes, with coset errata applied when asked.
    pub fn codes(&self, n: u32, q: u32, errata: bool) -> Result<(CyclicCodeSpec, CyclicCodeSpec)> {
        let (mut c, mut d) = (self.c, self.d);
        for e in self.errata.iter().filter(|_| errata) {
            match *e {
                Erratum::StorageCosets { reps, .. } => c = CosetList::Union(reps),
                Erratum::RetrievalCosets { reps, .. } => d = CosetList::Union(reps),
                Erratum::Cell { .. } => {}
            }
        }
        Ok((c.code(n, q)?, d.code(n, q)?))
    }

    /// Printed column `i`, or its erratum reading when asked.
    pub fn expected(&self, i: usize, errata: bool) -> Option<PrintedCode> {
        let reading = self.errata.iter().filter(|_| errata).find_map(|e| match *e {
            Erratum::Cell { column, reading, .. } if column == i => Some(reading),
            _ => None,
        });
        reading.or(self.columns[i])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub id: TableId,
    pub n: u32,
    pub q: u32,
    pub rows: Vec<FixtureRow>,
    pub notes: Vec<&'static str>,
}

pub const COLUMN_NAMES: [&str; 5] = ["C", "D", "Ddual", "star", "stardual"];

const fn ex(k: usize, d: usize) -> Option<PrintedCode> {
    Some(PrintedCode { k, d: PrintedDistance::Exact { d } })
}

const fn ge(k: usize, d: usize) -> Option<PrintedCode> {
    Some(PrintedCode { k, d: PrintedDistance::AtLeast { d } })
}

const fn bp(k: usize, bch: usize, extra: usize) -> Option<PrintedCode> {
    Some(PrintedCode { k, d: PrintedDistance::BchPlus { bch, extra } })
}

const fn ko(k: usize) -> Option<PrintedCode> {
    Some(PrintedCode { k, d: PrintedDistance::Absent })
}

#[allow(clippy::too_many_arguments)]
fn row(
    style: RowStyle,
    c: CosetList,
    d: CosetList,
    columns: [Option<PrintedCode>; 5],
    privacy: PrintedPrivacy,
    rate: (u64, u64),
) -> FixtureRow {
    FixtureRow { style, c, d, columns, privacy, rate, errata: Vec::new(), notes: Vec::new() }
}

const fn t(t: usize) -> PrintedPrivacy {
    PrintedPrivacy::Exact { t }
}

const fn t_ge(t: usize) -> PrintedPrivacy {
    PrintedPrivacy::AtLeast { t }
}

use CosetList::{Complement as Vminus, Union as U};
use RowStyle::{Bold, Plain, Shaded};

fn table_one() -> Fixture {
    let mut rows = vec![
        row(Plain, U(&[0, 31]), U(&[0, 5, 23, 27, 31]), [ex(8, 63), ex(29, 43), ex(98, 10), ex(113, 5), ex(14, 56)], t(9), (14, 127)),
        row(Plain, U(&[0, 11]), U(&[1, 3, 11, 23, 43, 55]), [ex(8, 63), ex(42, 32), ex(85, 13), ex(112, 6), ex(15, 55)], t(12), (15, 127)),
        row(Plain, U(&[0, 5, 43]), U(&[0, 23, 43]), [ex(15, 55), ex(15, 55), ex(112, 6), ex(106, 7), ex(21, 48)], t(5), (21, 127)),
        row(Plain, U(&[0, 23, 63]), U(&[19, 31, 55]), [ex(15, 55), ex(21, 48), ex(106, 7), ex(112, 6), ex(15, 55)], t(6), (15, 127)),
        row(Plain, U(&[1, 10, 29]), U(&[7, 31, 55]), [ex(21, 48), ex(21, 48), ex(106, 7), ex(112, 6), ex(15, 55)], t(6), (15, 127)),
    ];
    rows[0].notes.push("U{1,31} would give dimension 14; the listed U{0,31} gives the printed 8");
    rows[4].errata.push(Erratum::StorageCosets {
        reps: &[1, 13, 29],
        note: "as printed, U{1,10,29} = U{1,5,29} has C*D of dimension 126 and d(C) = 44; \
               U{1,13,29} is the only single-coset substitution reproducing every printed cell",
    });
    Fixture { id: TableId::One, n: 127, q: 2, rows, notes: Vec::new() }
}

const T3_D: [&[u32]; 9] = [
    &[0, 1],
    &[0, 1, 5, 9],
    &[0, 1, 5, 9, 3],
    &[0, 1, 5, 9, 3, 11, 19, 21],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7, 13],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7, 13, 23, 27, 43],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7, 13, 23, 27, 43, 29],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7, 13, 23, 27, 29, 43, 15],
];

/// U_13 in place of U_7 in the printed nine-coset D.
const T3_ROW5_D: &[u32] = &[0, 1, 5, 9, 3, 11, 19, 21, 13];

const ROW5_D_NOTE: &str = "as printed, D = U{0,1,5,9,3,11,19,21,7} has d = 15 (BCH 15, weight-15 codeword found); \
     U_13 in place of U_7 is the only single-coset change giving [127,57,23] with the printed C*D";

fn table_three() -> Fixture {
    let c = U(&[0, 1]);
    let spec: [(RowStyle, [Option<PrintedCode>; 5], usize, u64); 9] = [
        (Shaded, [ex(8, 63), ex(8, 63), ex(119, 4), ex(29, 31), ex(98, 7)], 3, 98),
        (Bold, [ex(8, 63), ex(22, 47), ex(105, 8), ex(64, 15), ex(63, 16)], 7, 63),
        (Shaded, [ex(8, 63), ex(29, 31), ex(98, 8), ex(64, 15), ex(63, 16)], 7, 63),
        (Bold, [ex(8, 63), ex(50, 27), ex(77, 16), ex(99, 7), ex(28, 32)], 15, 28),
        (Bold, [ex(8, 63), ex(57, 23), ex(70, 16), ex(99, 7), ex(28, 32)], 15, 28),
        (Shaded, [ex(8, 63), ex(64, 15), ex(63, 16), ex(99, 7), ex(28, 32)], 15, 28),
        (Bold, [ex(8, 63), ex(85, 13), ex(42, 32), ex(120, 3), ex(7, 64)], 31, 7),
        (Bold, [ex(8, 63), ex(92, 11), ex(35, 32), ex(120, 3), ex(7, 64)], 31, 7),
        (Shaded, [ex(8, 63), ex(99, 7), ex(28, 32), ex(120, 3), ex(7, 64)], 31, 7),
    ];
    let mut rows: Vec<FixtureRow> =
        spec.iter().zip(T3_D).map(|(&(style, cols, p, u), d)| row(style, c, U(d), cols, t(p), (u, 127))).collect();
    rows[0].errata.push(Erratum::Cell {
        column: 4,
        reading: PrintedCode { k: 98, d: PrintedDistance::Exact { d: 8 } },
        note: "printed d = 7; the same code (dual of U{0,1,3,5,9}) is printed [127,98,8] in row 3",
    });
    rows[3].notes.push("the same D is printed [127,50,23] in the shortened comparison table");
    rows[4].errata.push(Erratum::RetrievalCosets { reps: T3_ROW5_D, note: ROW5_D_NOTE });
    Fixture { id: TableId::Three, n: 127, q: 2, rows, notes: vec!["every D has BCH bound equal to its minimum distance"] }
}

fn table_four() -> Fixture {
    let c = U(&[85]);
    let spec: [(&'static [u32], usize, usize, usize, usize, usize, usize, u64); 7] = [
        (&[0, 1, 11, 13, 17, 21, 25, 61, 85, 87], 192, 63, 20, 45, 19, 64, 19),
        (&[1, 13, 25, 27, 29, 31, 45, 119], 195, 60, 15, 51, 8, 65, 8),
        (&[0, 1, 7, 13, 25, 31, 39, 45], 198, 57, 15, 53, 8, 67, 8),
        (&[0, 1, 13, 17, 25, 29, 31, 63, 85], 200, 55, 29, 41, 11, 69, 11),
        (&[39, 55, 61, 63, 85, 87, 119, 127], 201, 54, 40, 32, 9, 71, 9),
        (&[0, 1, 9, 13, 25, 31, 111, 119], 202, 53, 28, 44, 8, 71, 8),
        (&[0, 1, 11, 13, 29, 47, 85, 111], 204, 51, 14, 60, 11, 73, 11),
    ];
    let rows = spec
        .iter()
        .map(|&(reps, kd, kdd, a, b, ksd, p, u)| {
            row(Plain, c, Vminus(reps), [ex(2, 170), ko(kd), bp(kdd, a, b), None, ko(ksd)], t(p), (u, 255))
        })
        .collect();
    Fixture {
        id: TableId::Four,
        n: 255,
        q: 2,
        rows,
        notes: vec!["d(D^perp) is printed as a+b: BCH bound a, true distance a+b; both sides of every D exceed 2^29 codewords"],
    }
}

const T5_D: [&[u32]; 15] = [
    &[0, 1],
    &[0, 1, 3, 5],
    &[0, 1, 3, 5, 9],
    &[0, 1, 3, 5, 9, 17],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 25],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 53],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 45, 53],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 45, 51, 53],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 43, 45, 51, 53],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 43, 45, 51, 53, 85],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 43, 45, 51, 53, 85, 31, 47, 55, 59, 61, 87],
    &[0, 1, 3, 5, 9, 17, 7, 11, 13, 19, 21, 25, 37, 15, 23, 27, 29, 39, 43, 45, 51, 53, 85, 31, 47, 55, 59, 61, 87, 91],
];

fn table_five() -> Fixture {
    let c = U(&[0, 1]);
    let spec: [(RowStyle, [Option<PrintedCode>; 5], PrintedPrivacy, u64); 15] = [
        (Shaded, [ex(9, 127), ex(9, 127), ex(246, 4), ex(37, 63), ex(218, 8)], t(3), 218),
        (Bold, [ex(9, 127), ge(25, 63), ge(230, 8), ko(93), ko(162)], t_ge(7), 162),
        (Bold, [ex(9, 127), ge(33, 63), ge(222, 8), ko(93), ko(162)], t_ge(7), 162),
        (Shaded, [ex(9, 127), ex(37, 63), ex(218, 8), ex(93, 31), ex(162, 16)], t(7), 162),
        (Bold, [ex(9, 127), ge(77, 31), ge(178, 16), ko(161), ko(94)], t_ge(15), 94),
        (Bold, [ex(9, 127), ge(85, 31), ge(170, 16), ko(163), ko(92)], t_ge(15), 92),
        (Shaded, [ex(9, 127), ex(93, 31), ex(162, 16), ex(163, 15), ex(92, 32)], t(15), 92),
        (Bold, [ex(9, 127), ge(133, 15), ge(122, 32), ko(219), ko(36)], t_ge(31), 36),
        (Bold, [ex(9, 127), ge(141, 15), ge(114, 32), ko(219), ko(36)], t_ge(31), 36),
        (Bold, [ex(9, 127), ge(149, 15), ge(106, 32), ko(219), ko(36)], t_ge(31), 36),
        (Bold, [ex(9, 127), ge(153, 15), ge(102, 32), ko(219), ko(36)], t_ge(31), 36),
        (Bold, [ex(9, 127), ge(161, 15), ge(94, 32), ko(219), ko(36)], t_ge(31), 36),
        (Shaded, [ex(9, 127), ex(163, 15), ex(92, 32), ex(219, 7), ex(36, 64)], t(31), 36),
        (Bold, [ex(9, 127), ge(211, 7), ge(44, 64), ko(247), ko(8)], t_ge(63), 8),
        (Shaded, [ex(9, 127), ex(219, 7), ex(36, 64), ex(247, 3), ex(8, 128)], t(63), 8),
    ];
    let mut rows: Vec<FixtureRow> =
        spec.iter().zip(T5_D).map(|(&(style, cols, p, u), d)| row(style, c, U(d), cols, p, (u, 255))).collect();
    for i in [8, 10] {
        rows[i].notes.push("(C*D)^perp printed as [25536]; read as [255,36]");
    }
    Fixture {
        id: TableId::Five,
        n: 255,
        q: 2,
        rows,
        notes: vec!["the storage code U{0,1} is [255,9,127]; a prose mention of [255,9,172] disagrees with every row"],
    }
}

const T7_D: [&[u32]; 9] = [
    &[1],
    &[0, 1, 5, 9],
    &[1, 5, 9, 3],
    &[0, 1, 5, 9, 3, 11, 19, 21],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7],
    &[1, 5, 9, 3, 11, 19, 21, 7, 13],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7, 13, 23, 27, 43],
    &[0, 1, 5, 9, 3, 11, 19, 21, 7, 13, 23, 27, 43, 29],
    &[1, 5, 9, 3, 11, 19, 21, 7, 13, 23, 27, 29, 43, 15],
];

fn table_seven() -> Fixture {
    let c = U(&[1]);
    let spec: [(RowStyle, [Option<PrintedCode>; 5], usize, u64); 9] = [
        (Shaded, [ex(7, 64), ex(7, 64), ex(120, 3), ex(28, 32), ex(99, 7)], 2, 99),
        (Bold, [ex(7, 64), ex(22, 47), ex(105, 8), ex(63, 16), ex(64, 15)], 7, 64),
        (Shaded, [ex(7, 64), ex(28, 32), ex(99, 7), ex(63, 16), ex(64, 15)], 6, 64),
        (Bold, [ex(7, 64), ex(50, 23), ex(77, 16), ex(98, 8), ex(29, 31)], 15, 29),
        (Bold, [ex(7, 64), ex(57, 23), ex(70, 16), ex(98, 8), ex(29, 31)], 15, 29),
        (Shaded, [ex(7, 64), ex(63, 16), ex(64, 15), ex(98, 8), ex(29, 31)], 14, 29),
        (Bold, [ex(7, 64), ex(85, 13), ex(42, 32), ex(119, 4), ex(8, 63)], 31, 8),
        (Bold, [ex(7, 64), ex(92, 11), ex(35, 32), ex(119, 4), ex(8, 63)], 31, 8),
        (Shaded, [ex(7, 64), ex(98, 8), ex(29, 31), ex(119, 4), ex(8, 63)], 30, 8),
    ];
    let mut rows: Vec<FixtureRow> =
        spec.iter().zip(T7_D).map(|(&(style, cols, p, u), d)| row(style, c, U(d), cols, t(p), (u, 127))).collect();
    rows[3].errata.push(Erratum::Cell {
        column: 1,
        reading: PrintedCode { k: 50, d: PrintedDistance::Exact { d: 27 } },
        note: "printed d = 23; the same D is printed [127,50,27] in the punctured comparison table and its BCH bound is 27",
    });
    rows[4].errata.push(Erratum::RetrievalCosets { reps: T3_ROW5_D, note: ROW5_D_NOTE });
    Fixture { id: TableId::Seven, n: 127, q: 2, rows, notes: Vec::new() }
}

pub fn fixture(id: TableId) -> Fixture {
    match id {
        TableId::One => table_one(),
        TableId::Three => table_three(),
        TableId::Four => table_four(),
        TableId::Five => table_five(),
        TableId::Seven => table_seven(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "BOUND-CONSISTENT")]
    BoundConsistent,
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::BoundConsistent => "BOUND-CONSISTENT",
            Verdict::Mismatch => "MISMATCH",
        })
    }
}

/// How far a cell can be settled by exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verifiability {
    ExactAtDefault,
    ExactAtDeep,
    BoundOnly,
}

impl Verifiability {
    /// Decided by the smaller of q^k and q^(n-k).
    pub fn of(q: u32, n: usize, k: usize) -> Self {
        let side = k.min(n - k);
        if distance::within(q, side, distance::DEFAULT_BUDGET) {
            Verifiability::ExactAtDefault
        } else if distance::within(q, side, distance::DEEP_BUDGET) {
            Verifiability::ExactAtDeep
        } else {
            Verifiability::BoundOnly
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Dimension,
    Distance,
    Privacy,
    Rate,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellCheck {
    pub column: &'static str,
    pub quantity: Quantity,
    /// As printed.
    pub printed: String,
    /// The erratum reading compared instead, when one applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
    pub computed: String,
    pub verdict: Verdict,
    pub class: Verifiability,
    /// BCH bound of the column's code, for distance cells.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bch: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub index: usize,
    pub style: RowStyle,
    #[serde(rename = "C_printed")]
    pub c_printed: CosetList,
    #[serde(rename = "D_printed")]
    pub d_printed: CosetList,
    /// Errata applied to this row.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<Erratum>,
    pub computed: SchemeRow,
    pub cells: Vec<CellCheck>,
    pub self_consistent: bool,
    pub notes: Vec<&'static str>,
}

impl TableRow {
    pub fn verdict(&self) -> Verdict {
        let worst = self.cells.iter().map(|c| c.verdict).max().unwrap_or(Verdict::Match);
        if self.self_consistent {
            worst
        } else {
            Verdict::Mismatch
        }
    }

    pub fn cell(&self, column: &str, quantity: Quantity) -> Option<&CellCheck> {
        self.cells.iter().find(|c| c.column == column && c.quantity == quantity)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub id: TableId,
    pub n: u32,
    pub q: u32,
    pub budget: u64,
    pub errata: bool,
    pub rows: Vec<TableRow>,
    pub notes: Vec<&'static str>,
    pub counts: VerdictCounts,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    #[serde(rename = "MATCH")]
    pub matched: usize,
    #[serde(rename = "BOUND-CONSISTENT")]
    pub bound_consistent: usize,
    #[serde(rename = "MISMATCH")]
    pub mismatched: usize,
}

impl TableReport {
    pub fn verdict(&self) -> Verdict {
        self.rows.iter().map(TableRow::verdict).max().unwrap_or(Verdict::Match)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, &CellCheck)> {
        self.rows.iter().flat_map(|r| r.cells.iter().map(move |c| (r.index, c)))
    }
}

fn distance_verdict(printed: PrintedDistance, r: &DistanceReport, bch: usize) -> Option<Verdict> {
    let against = |d: usize| {
        if bch > d {
            Verdict::Mismatch
        } else if r.exact {
            if r.admits(d) {
                Verdict::Match
            } else {
                Verdict::Mismatch
            }
        } else if r.admits(d) {
            Verdict::BoundConsistent
        } else {
            Verdict::Mismatch
        }
    };
    match printed {
        PrintedDistance::Exact { d } => Some(against(d)),
        PrintedDistance::AtLeast { d } => Some(if r.upper < distance::Bound::Finite(d) {
            Verdict::Mismatch
        } else {
            Verdict::BoundConsistent
        }),
        PrintedDistance::BchPlus { bch: a, extra } => Some(if bch != a { Verdict::Mismatch } else { against(a + extra) }),
        PrintedDistance::Absent => None,
    }
}

fn privacy_verdict(printed: PrintedPrivacy, p: &Privacy) -> Verdict {
    match printed {
        PrintedPrivacy::Exact { t } if p.exact => {
            if p.lo == t {
                Verdict::Match
            } else {
                Verdict::Mismatch
            }
        }
        PrintedPrivacy::Exact { t } if p.lo <= t && t <= p.hi => Verdict::BoundConsistent,
        PrintedPrivacy::Exact { .. } => Verdict::Mismatch,
        PrintedPrivacy::AtLeast { t } if p.hi >= t => Verdict::BoundConsistent,
        PrintedPrivacy::AtLeast { .. } => Verdict::Mismatch,
    }
}

fn check_row(fx: &Fixture, index: usize, fr: &FixtureRow, engine: &DistanceEngine, errata: bool) -> Result<TableRow> {
    let (n, q) = (fx.n, fx.q);
    let (c, d) = fr.codes(n, q, errata)?;
    let star = c.star(&d)?;
    let codes = [c.clone(), d.clone(), d.dual(), star.clone(), star.dual()];
    let computed = scheme_row(&c, &d, engine)?;
    let columns = [&computed.c, &computed.d, &computed.ddual, &computed.star, &computed.stardual];
    let mut cells = Vec::new();
    for (i, verbatim) in fr.columns.iter().enumerate() {
        let Some(verbatim) = verbatim else { continue };
        let printed = fr.expected(i, errata).expect("erratum for a printed column");
        let reading = |s: String, v: String| (s != v).then_some(s);
        let col = columns[i];
        let class = Verifiability::of(q, n as usize, col.k());
        cells.push(CellCheck {
            column: COLUMN_NAMES[i],
            quantity: Quantity::Dimension,
            printed: verbatim.k.to_string(),
            reading: reading(printed.k.to_string(), verbatim.k.to_string()),
            computed: col.k().to_string(),
            verdict: if printed.k == col.k() { Verdict::Match } else { Verdict::Mismatch },
            class: Verifiability::ExactAtDefault,
            bch: None,
        });
        let bch = codes[i].bch_bound();
        if let Some(verdict) = distance_verdict(printed.d, col.distance(), bch) {
            cells.push(CellCheck {
                column: COLUMN_NAMES[i],
                quantity: Quantity::Distance,
                printed: verbatim.d.to_string(),
                reading: reading(printed.d.to_string(), verbatim.d.to_string()),
                computed: col.distance().to_string(),
                verdict,
                class,
                bch: Some(bch),
            });
        }
    }
    cells.push(CellCheck {
        column: "privacy",
        quantity: Quantity::Privacy,
        printed: fr.privacy.to_string(),
        reading: None,
        computed: computed.privacy.to_string(),
        verdict: privacy_verdict(fr.privacy, &computed.privacy),
        class: Verifiability::of(q, n as usize, computed.ddual.k()),
        bch: None,
    });
    let rate_ok = computed.rate.num == fr.rate.0 && computed.rate.den == fr.rate.1;
    cells.push(CellCheck {
        column: "rate",
        quantity: Quantity::Rate,
        printed: format!("{}/{}", fr.rate.0, fr.rate.1),
        reading: None,
        computed: computed.rate.to_string(),
        verdict: if rate_ok { Verdict::Match } else { Verdict::Mismatch },
        class: Verifiability::ExactAtDefault,
        bch: None,
    });
    let errata_applied: Vec<Erratum> = if errata { fr.errata.clone() } else { Vec::new() };
    Ok(TableRow {
        index: index + 1,
        style: fr.style,
        c_printed: fr.c,
        d_printed: fr.d,
        errata: errata_applied,
        self_consistent: computed.is_self_consistent(),
        computed,
        cells,
        notes: fr.notes.clone(),
    })
}

/// Rebuild every row of table `id` and compare it with the printed cells,
/// reading them through the recorded errata when `errata` is set.
pub fn reproduce_table_with(id: TableId, opts: DistanceOptions, errata: bool) -> Result<TableReport> {
    let fx = fixture(id);
    let engine = DistanceEngine::new(opts)?;
    let rows: Vec<TableRow> =
        fx.rows.par_iter().enumerate().map(|(i, fr)| check_row(&fx, i, fr, &engine, errata)).collect::<Result<_>>()?;
    let mut counts = VerdictCounts::default();
    for cell in rows.iter().flat_map(|r| &r.cells) {
        match cell.verdict {
            Verdict::Match => counts.matched += 1,
            Verdict::BoundConsistent => counts.bound_consistent += 1,
            Verdict::Mismatch => counts.mismatched += 1,
        }
    }
    Ok(TableReport { id, n: fx.n, q: fx.q, budget: opts.budget, errata, rows, notes: fx.notes, counts })
}

/// [`reproduce_table_with`] at the default or the deep budget, errata applied.
pub fn reproduce_table(id: TableId, deep: bool) -> Result<TableReport> {
    reproduce_table_with(id, if deep { DistanceOptions::deep() } else { DistanceOptions::default() }, true)
}
