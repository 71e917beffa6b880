//! Enumerate invariant tuples over a box and stream the feasible ones.
//!
//! The box is split along `d`. Slices are evaluated in parallel in batches
//! and written back in order, so the output is identical for any worker
//! count.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::constraints::{is_feasible, HypothesisConfig};
use crate::error::{Error, Result};
use crate::invariants::{profile, InvariantTuple, Profile, FIELD_NAMES};
use crate::rational::to_text;

/// Inclusive range `lo..=hi` walked with a positive step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Axis {
    pub lo: i64,
    pub hi: i64,
    pub step: i64,
}

impl Axis {
    pub fn range(lo: i64, hi: i64) -> Self {
        Axis { lo, hi, step: 1 }
    }

    pub fn fixed(x: i64) -> Self {
        Self::range(x, x)
    }

    pub fn stepped(lo: i64, hi: i64, step: i64) -> Self {
        Axis { lo, hi, step }
    }

    pub fn len(&self) -> u128 {
        if self.hi < self.lo || self.step <= 0 {
            0
        } else {
            ((i128::from(self.hi) - i128::from(self.lo)) / i128::from(self.step) + 1) as u128
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + Clone {
        let step = self.step.max(1) as usize;
        (self.lo..=self.hi).step_by(step)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else if self.step == 1 {
            write!(f, "{}..{}", self.lo, self.hi)
        } else {
            write!(f, "{}..{}:{}", self.lo, self.hi, self.step)
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    /// `x`, `lo..hi` or `lo..hi:step`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBox(format!("bad range {s:?}"));
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        let (range, step) = match s.split_once(':') {
            Some((r, st)) => (r, num(st)?),
            None => (s, 1),
        };
        match range.split_once("..") {
            Some((lo, hi)) => Ok(Axis::stepped(num(lo)?, num(hi)?, step)),
            None if step == 1 => Ok(Axis::fixed(num(range)?)),
            None => Err(bad()),
        }
    }
}

/// Lattice box in `(d, δ, χ, u, v)` space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanBox {
    axes: [Axis; 5],
}

impl ScanBox {
    pub fn new(axes: [Axis; 5]) -> Result<Self> {
        for (name, axis) in FIELD_NAMES.iter().zip(&axes) {
            if axis.step <= 0 {
                return Err(Error::InvalidBox(format!("{name}: step must be positive")));
            }
            if axis.is_empty() {
                return Err(Error::InvalidBox(format!("{name}: empty range {axis}")));
            }
        }
        Ok(ScanBox { axes })
    }

    pub fn axes(&self) -> &[Axis; 5] {
        &self.axes
    }

    /// Number of lattice points.
    pub fn volume(&self) -> u128 {
        self.axes.iter().map(Axis::len).product()
    }

    /// Every point in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = [i64; 5]> + '_ {
        let [d, rest @ ..] = &self.axes;
        d.values().flat_map(move |d| slice_points(d, rest))
    }
}

fn slice_points(d: i64, rest: &[Axis]) -> impl Iterator<Item = [i64; 5]> + '_ {
    let [delta, chi, u, v] = rest else {
        unreachable!("four axes after d")
    };
    delta.values().flat_map(move |delta| {
        chi.values().flat_map(move |chi| {
            u.values()
                .flat_map(move |u| v.values().map(move |v| [d, delta, chi, u, v]))
        })
    })
}

impl fmt::Display for ScanBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, axis)) in FIELD_NAMES.iter().zip(&self.axes).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{name}={axis}")?;
        }
        Ok(())
    }
}

impl FromStr for ScanBox {
    type Err = Error;

    /// `d=1..2,delta=-2,chi=1,u=1..2,v=0..2`; every field is required.
    fn from_str(s: &str) -> Result<Self> {
        let mut axes: [Option<Axis>; 5] = [None; 5];
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, range) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidBox(format!("expected name=range, got {part:?}")))?;
            let idx = FIELD_NAMES
                .iter()
                .position(|n| *n == name.trim())
                .ok_or_else(|| Error::InvalidBox(format!("unknown field {name:?}")))?;
            if axes[idx].is_some() {
                return Err(Error::InvalidBox(format!("field {name} given twice")));
            }
            axes[idx] = Some(range.parse()?);
        }
        let mut out = [Axis::fixed(0); 5];
        for (i, axis) in axes.into_iter().enumerate() {
            out[i] =
                axis.ok_or_else(|| Error::InvalidBox(format!("missing field {}", FIELD_NAMES[i])))?;
        }
        ScanBox::new(out)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanFormat {
    /// `d,delta,chi,u,v`, optionally followed by profile columns.
    #[default]
    Csv,
    /// One profile-augmented JSON object per line.
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub workers: usize,
    pub format: ScanFormat,
    pub with_profile: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: 1,
            format: ScanFormat::Csv,
            with_profile: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub scanned: u128,
    pub feasible: u128,
}

pub const CSV_HEADER: &str = "d,delta,chi,u,v";
pub const CSV_PROFILE_COLUMNS: &str = "h2k,hk2,k3,hc2,c3,KS2,g,s1h2,s20h,s11h,s300,s210,s111";

pub fn csv_header(with_profile: bool) -> String {
    if with_profile {
        format!("{CSV_HEADER},{CSV_PROFILE_COLUMNS}")
    } else {
        CSV_HEADER.to_string()
    }
}

/// One CSV row (without line terminator).
pub fn csv_row(t: &InvariantTuple, p: Option<&Profile>) -> String {
    let mut row = t.to_string();
    if let Some(p) = p {
        let cols = [
            p.h2k.to_string(),
            p.hk2.to_string(),
            p.k3.to_string(),
            p.hc2.to_string(),
            p.c3top.to_string(),
            p.ks2.to_string(),
            to_text(&p.g),
            p.s1h2.to_string(),
            p.s20h.to_string(),
            p.s11h.to_string(),
            p.s300.to_string(),
            p.s210.to_string(),
            p.s111.to_string(),
        ];
        for c in cols {
            row.push(',');
            row.push_str(&c);
        }
    }
    row
}

#[derive(Serialize)]
struct JsonRow<'a> {
    #[serde(flatten)]
    tuple: &'a InvariantTuple,
    #[serde(flatten)]
    profile: &'a Profile,
}

pub fn json_row(t: &InvariantTuple, p: &Profile) -> String {
    serde_json::to_string(&JsonRow {
        tuple: t,
        profile: p,
    })
    .expect("rows serialize")
}

fn tuple_of(p: [i64; 5]) -> InvariantTuple {
    let [d, delta, chi, u, v] = p;
    InvariantTuple::new(d, delta, chi, u, v)
}

/// Render the feasible rows of one `d` slice.
fn render_slice(
    d: i64,
    rest: &[Axis],
    cfg: &HypothesisConfig,
    opts: &ScanOptions,
) -> (Vec<u8>, u128) {
    let mut buf = Vec::new();
    let mut count = 0u128;
    for point in slice_points(d, rest) {
        let t = tuple_of(point);
        if !is_feasible(&t, cfg) {
            continue;
        }
        count += 1;
        let line = match opts.format {
            ScanFormat::Csv if opts.with_profile => csv_row(&t, Some(&profile(&t))),
            ScanFormat::Csv => csv_row(&t, None),
            ScanFormat::JsonLines => json_row(&t, &profile(&t)),
        };
        buf.extend_from_slice(line.as_bytes());
        buf.push(b'\n');
    }
    (buf, count)
}

/// Slices evaluated per batch, per worker.
const SLICES_PER_WORKER: usize = 4;

/// Write every feasible tuple of `scan_box` to `sink`, in lexicographic
/// order. On a write error the scan stops and the error is returned; any
/// output already written is incomplete.
pub fn scan<W: Write + ?Sized>(
    scan_box: &ScanBox,
    cfg: &HypothesisConfig,
    opts: &ScanOptions,
    sink: &mut W,
) -> Result<ScanSummary> {
    let workers = opts.workers.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;

    if opts.format == ScanFormat::Csv {
        writeln!(sink, "{}", csv_header(opts.with_profile))?;
    }

    let [d_axis, rest @ ..] = scan_box.axes();
    let d_values: Vec<i64> = d_axis.values().collect();
    let mut feasible = 0u128;
    for batch in d_values.chunks(workers * SLICES_PER_WORKER) {
        let rendered: Vec<(Vec<u8>, u128)> = pool.install(|| {
            batch
                .par_iter()
                .map(|&d| render_slice(d, rest, cfg, opts))
                .collect()
        });
        for (bytes, count) in rendered {
            sink.write_all(&bytes)?;
            feasible += count;
        }
    }
    sink.flush()?;
    Ok(ScanSummary {
        scanned: scan_box.volume(),
        feasible,
    })
}

/// Feasible tuples of `scan_box` with their profiles, in lexicographic order.
pub fn scan_collect(
    scan_box: &ScanBox,
    cfg: &HypothesisConfig,
    workers: usize,
) -> Result<(Vec<(InvariantTuple, Profile)>, ScanSummary)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let [d_axis, rest @ ..] = scan_box.axes();
    let d_values: Vec<i64> = d_axis.values().collect();
    let slices: Vec<Vec<(InvariantTuple, Profile)>> = pool.install(|| {
        d_values
            .par_iter()
            .map(|&d| {
                slice_points(d, rest)
                    .map(tuple_of)
                    .filter(|t| is_feasible(t, cfg))
                    .map(|t| {
                        let p = profile(&t);
                        (t, p)
                    })
                    .collect()
            })
            .collect()
    });
    let rows: Vec<_> = slices.into_iter().flatten().collect();
    let summary = ScanSummary {
        scanned: scan_box.volume(),
        feasible: rows.len() as u128,
    };
    Ok((rows, summary))
}
