//! Two-region classification experiments: sample training points from a
//! pattern, train, classify every cell, and score the result. Sweeps repeat
//! this over training-set sizes, radii and seeds.

use std::collections::BTreeMap;

use crate::encoding::{encode_point, Scheme};
use crate::error::{domain, Error, Result};
use crate::exec::Execution;
use crate::network::{train, TrainingSample};
use crate::patterns::{sample_training_points, PatternGrid, SplitMix64};

pub const CSV_HEADER: [&str; 9] = [
    "pattern",
    "scheme",
    "n",
    "r",
    "seed",
    "correct",
    "misclassified",
    "error",
    "efficiency",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub id: String,
    pub grid: PatternGrid,
}

impl Pattern {
    pub fn new(id: impl Into<String>, grid: PatternGrid) -> Self {
        Pattern {
            id: id.into(),
            grid,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub pattern_id: String,
    pub scheme: Scheme,
    pub n: usize,
    pub r: u32,
    pub seed: u64,
    pub correct: usize,
    pub misclassified: usize,
    pub error_coefficient: f64,
    pub efficiency_percent: f64,
}

impl RunResult {
    pub fn total(&self) -> usize {
        self.correct + self.misclassified
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Experiment {
    pub result: RunResult,
    pub predicted: PatternGrid,
}

/// Fraction of points misclassified.
pub fn error_coefficient(misclassified: usize, total: usize) -> Result<f64> {
    if total == 0 {
        return domain("total point count must be positive");
    }
    if misclassified > total {
        return domain(format!("{misclassified} misclassified out of {total}"));
    }
    Ok(misclassified as f64 / total as f64)
}

/// Percentage of points classified correctly, `100·(1 − E)`.
pub fn efficiency(error: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&error) {
        return domain(format!("error coefficient {error} outside [0, 1]"));
    }
    Ok(100.0 * (1.0 - error))
}

/// Coordinate range used to encode a grid's rows and columns.
pub fn coordinate_range(grid: &PatternGrid) -> usize {
    grid.width().max(grid.height()).max(2)
}

pub fn run_experiment(
    pattern: &Pattern,
    scheme: Scheme,
    n: usize,
    r: u32,
    seed: u64,
) -> Result<Experiment> {
    run_experiment_with(pattern, scheme, n, r, seed, Execution::Parallel)
}

/// Single run; `exec` controls how the grid cells are classified.
pub fn run_experiment_with(
    pattern: &Pattern,
    scheme: Scheme,
    n: usize,
    r: u32,
    seed: u64,
    exec: Execution,
) -> Result<Experiment> {
    let grid = &pattern.grid;
    let range = coordinate_range(grid);
    let points = sample_training_points(grid, n, seed)?;
    let samples = points
        .iter()
        .map(|p| {
            let input = encode_point(p.row + 1, p.col + 1, range, scheme)?;
            Ok(TrainingSample::new(input, vec![p.label]))
        })
        .collect::<Result<Vec<_>>>()?;
    let net = train(&samples, r, scheme.dim())?;

    let cells: Vec<usize> = (0..grid.len()).collect();
    let predicted = exec
        .map(&cells, |&i| {
            let input = encode_point(i / grid.width() + 1, i % grid.width() + 1, range, scheme)?;
            Ok(net.infer(&input)?[0])
        })
        .into_iter()
        .collect::<Result<Vec<bool>>>()?;
    let predicted = PatternGrid::new(grid.width(), grid.height(), predicted)?;

    let misclassified = grid
        .cells()
        .iter()
        .zip(predicted.cells())
        .filter(|(a, b)| a != b)
        .count();
    let total = grid.len();
    let error = error_coefficient(misclassified, total)?;
    let result = RunResult {
        pattern_id: pattern.id.clone(),
        scheme,
        n,
        r,
        seed,
        correct: total - misclassified,
        misclassified,
        error_coefficient: error,
        efficiency_percent: efficiency(error)?,
    };
    Ok(Experiment { result, predicted })
}

/// Sampling seed used by a sweep for training-set size `n` under `seed`:
/// output number `n` of the SplitMix64 stream seeded with `seed`. Every
/// radius at the same `(n, seed)` trains on the same points.
pub fn derive_run_seed(seed: u64, n: usize) -> u64 {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..n {
        rng.next_u64();
    }
    rng.next_u64()
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepTable {
    pub rows: Vec<RunResult>,
}

fn sorted_unique<T: Ord + Copy>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn sweep(
    pattern: &Pattern,
    scheme: Scheme,
    ns: &[usize],
    rs: &[u32],
    seeds: &[u64],
) -> Result<SweepTable> {
    sweep_with(pattern, scheme, ns, rs, seeds, Execution::Parallel)
}

/// Every `(n, r, seed)` combination, rows ordered by n descending, then r and
/// seed ascending. Duplicate list entries are collapsed.
pub fn sweep_with(
    pattern: &Pattern,
    scheme: Scheme,
    ns: &[usize],
    rs: &[u32],
    seeds: &[u64],
    exec: Execution,
) -> Result<SweepTable> {
    if ns.is_empty() || rs.is_empty() || seeds.is_empty() {
        return domain("sweep needs at least one n, one r and one seed");
    }
    let mut ns = sorted_unique(ns);
    ns.reverse();
    let (rs, seeds) = (sorted_unique(rs), sorted_unique(seeds));
    let mut combos = Vec::with_capacity(ns.len() * rs.len() * seeds.len());
    for &n in &ns {
        for &r in &rs {
            combos.extend(seeds.iter().map(|&s| (n, r, s)));
        }
    }
    let rows = exec
        .map(&combos, |&(n, r, seed)| {
            let run_seed = derive_run_seed(seed, n);
            run_experiment_with(pattern, scheme, n, r, run_seed, Execution::Sequential)
                .map(|e| RunResult { seed, ..e.result })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { rows })
}

/// Mean error for one `(n, r)` cell of a sweep, kept as exact counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellMean {
    pub n: usize,
    pub r: u32,
    pub total: usize,
    pub runs: usize,
    pub misclassified_sum: usize,
}

impl CellMean {
    pub fn mean_error(&self) -> f64 {
        self.misclassified_sum as f64 / (self.runs * self.total) as f64
    }

    pub fn ratio(&self) -> f64 {
        self.n as f64 / self.total as f64
    }

    /// Exact comparison of mean errors by cross-multiplication.
    fn cmp_error(&self, other: &CellMean) -> std::cmp::Ordering {
        let lhs = self.misclassified_sum as u128 * (other.runs * other.total) as u128;
        let rhs = other.misclassified_sum as u128 * (self.runs * self.total) as u128;
        lhs.cmp(&rhs)
    }
}

/// Per-`(n, r)` means over seeds, ordered by r ascending then n descending.
pub fn cell_means(table: &SweepTable) -> Result<Vec<CellMean>> {
    let mut cells: BTreeMap<(u32, std::cmp::Reverse<usize>), CellMean> = BTreeMap::new();
    for row in &table.rows {
        let total = row.total();
        if total == 0 {
            return domain("row with zero points");
        }
        let cell = cells
            .entry((row.r, std::cmp::Reverse(row.n)))
            .or_insert(CellMean {
                n: row.n,
                r: row.r,
                total,
                runs: 0,
                misclassified_sum: 0,
            });
        if cell.total != total {
            return domain(format!(
                "rows for n={} r={} disagree on pattern size",
                row.n, row.r
            ));
        }
        cell.runs += 1;
        cell.misclassified_sum += row.misclassified;
    }
    Ok(cells.into_values().collect())
}

/// `n*/N` where `n*` minimises the mean error at radius `r`. Ties go to the
/// smaller `n`.
pub fn optimal_ratio(table: &SweepTable, r: u32) -> Result<f64> {
    optimal_cell(table, r).map(|c| c.ratio())
}

pub fn optimal_cell(table: &SweepTable, r: u32) -> Result<CellMean> {
    let means = cell_means(table)?;
    means
        .into_iter()
        .filter(|c| c.r == r)
        .min_by(|a, b| a.cmp_error(b).then(a.n.cmp(&b.n)))
        .ok_or_else(|| Error::Domain(format!("no rows at r = {r}")))
}

/// `#` black, `.` white, `x` black shown as white, `o` white shown as black.
pub fn render_map(predicted: &PatternGrid, truth: &PatternGrid) -> Result<String> {
    if predicted.width() != truth.width() || predicted.height() != truth.height() {
        return domain(format!(
            "prediction is {}x{}, truth is {}x{}",
            predicted.width(),
            predicted.height(),
            truth.width(),
            truth.height()
        ));
    }
    let mut out = String::with_capacity(truth.len() + truth.height());
    for row in 0..truth.height() {
        for col in 0..truth.width() {
            out.push(match (truth.get(row, col), predicted.get(row, col)) {
                (true, true) => '#',
                (false, false) => '.',
                (true, false) => 'x',
                (false, true) => 'o',
            });
        }
        out.push('\n');
    }
    Ok(out)
}

fn csv_fields(row: &RunResult) -> [String; 9] {
    [
        row.pattern_id.clone(),
        row.scheme.name().to_string(),
        row.n.to_string(),
        row.r.to_string(),
        row.seed.to_string(),
        row.correct.to_string(),
        row.misclassified.to_string(),
        format!("{:.6}", row.error_coefficient),
        format!("{:.6}", row.efficiency_percent),
    ]
}

fn write_csv<'a>(rows: impl IntoIterator<Item = &'a RunResult>, header: bool) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    // Writing into a Vec cannot fail.
    if header {
        w.write_record(CSV_HEADER).expect("in-memory write");
    }
    for row in rows {
        w.write_record(csv_fields(row)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
}

/// Header plus one line per row, errors to six decimal places.
pub fn export_csv(table: &SweepTable) -> String {
    write_csv(&table.rows, true)
}

/// One result as a CSV line, without header.
pub fn csv_row(row: &RunResult) -> String {
    write_csv([row], false)
}

/// Reads what [`export_csv`] writes. Errors carry the 1-based line number.
pub fn parse_csv(text: &str) -> Result<SweepTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let csv_err = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        Error::Parse {
            line,
            msg: e.to_string(),
        }
    };
    match records.next() {
        None => {
            return Err(Error::Parse {
                line: 1,
                msg: "missing header".into(),
            })
        }
        Some(rec) => {
            let rec = rec.map_err(csv_err)?;
            if rec.iter().ne(CSV_HEADER) {
                return Err(Error::Parse {
                    line: 1,
                    msg: "unexpected header".into(),
                });
            }
        }
    }
    let mut rows = Vec::new();
    for rec in records {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let bad = |name: &str| Error::Parse {
            line,
            msg: format!("bad `{name}` field"),
        };
        if rec.len() != CSV_HEADER.len() {
            return Err(Error::Parse {
                line,
                msg: format!("expected 9 fields, got {}", rec.len()),
            });
        }
        let scheme: Scheme = field(1).parse().map_err(|_| bad("scheme"))?;
        let n = field(2).parse().map_err(|_| bad("n"))?;
        let r = field(3).parse().map_err(|_| bad("r"))?;
        let seed = field(4).parse().map_err(|_| bad("seed"))?;
        let correct: usize = field(5).parse().map_err(|_| bad("correct"))?;
        let misclassified: usize = field(6).parse().map_err(|_| bad("misclassified"))?;
        let error_coefficient: f64 = field(7).parse().map_err(|_| bad("error"))?;
        let efficiency_percent: f64 = field(8).parse().map_err(|_| bad("efficiency"))?;
        if correct + misclassified == 0 {
            return Err(Error::Parse {
                line,
                msg: "row covers zero points".into(),
            });
        }
        rows.push(RunResult {
            pattern_id: field(0).to_string(),
            scheme,
            n,
            r,
            seed,
            correct,
            misclassified,
            error_coefficient,
            efficiency_percent,
        });
    }
    Ok(SweepTable { rows })
}
