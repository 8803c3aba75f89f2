//! Two-region pattern grids, built-in generators, pattern files, and seeded
//! training-point sampling.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::error::{domain, Error, Result};

/// SplitMix64. Small, portable, and fully defined by its seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound` by plain modulo reduction.
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        self.next_u64() % bound
    }
}

pub fn rng_next(rng: &mut SplitMix64) -> u64 {
    rng.next_u64()
}

/// Row-major bitmap; `true` is the black region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGrid {
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl PatternGrid {
    pub fn new(width: usize, height: usize, cells: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return domain("grid dimensions must be positive");
        }
        if cells.len() != width * height {
            return domain(format!("{} cells for a {width}x{height} grid", cells.len()));
        }
        Ok(PatternGrid {
            width,
            height,
            cells,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let cells = (0..height).flat_map(|row| (0..width).map(move |col| (row, col)));
        let cells = cells.map(|(row, col)| f(row, col)).collect();
        PatternGrid::new(width, height, cells)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Total number of points, `N`.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.width + col]
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn black_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }
}

fn check_size(size: usize) -> Result<()> {
    if size < 4 {
        return domain(format!("pattern size must be at least 4, got {size}"));
    }
    Ok(())
}

/// Archimedean spiral of pitch 4 cells centred on the grid.
pub fn generate_spiral(size: usize) -> Result<PatternGrid> {
    check_size(size)?;
    const PITCH: f64 = 4.0;
    let centre = (size as f64 - 1.0) / 2.0;
    PatternGrid::from_fn(size, size, |row, col| {
        let dx = col as f64 - centre;
        let dy = row as f64 - centre;
        let rho = dx.hypot(dy);
        let theta = dy.atan2(dx).rem_euclid(TAU) / TAU;
        let v = rho / PITCH - theta;
        v - v.floor() < 0.5
    })
}

/// Filled rectangle over the middle half of each axis.
pub fn generate_box(size: usize) -> Result<PatternGrid> {
    check_size(size)?;
    let (lo, hi) = (size / 4, 3 * size / 4);
    PatternGrid::from_fn(size, size, |row, col| {
        (lo..hi).contains(&row) && (lo..hi).contains(&col)
    })
}

/// Parses `"W H"` followed by `H` rows of exactly `W` characters from `{0, 1}`.
pub fn load_pattern(text: &str) -> Result<PatternGrid> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty pattern".into(),
    })?;
    let dims: Vec<&str> = header.split(' ').collect();
    let parse_dim = |s: &str| s.parse::<usize>().ok().filter(|&d| d > 0);
    let (width, height) = match dims.as_slice() {
        [w, h] => match (parse_dim(w), parse_dim(h)) {
            (Some(w), Some(h)) => (w, h),
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("bad dimensions `{header}`"),
                })
            }
        },
        _ => {
            return Err(Error::Parse {
                line: 1,
                msg: "expected `W H`".into(),
            })
        }
    };
    let mut cells = Vec::with_capacity(width * height);
    for row in 0..height {
        let line = row + 2;
        let text = lines.next().ok_or(Error::Parse {
            line,
            msg: "missing row".into(),
        })?;
        if text.len() != width {
            return Err(Error::Parse {
                line,
                msg: format!("row has {} characters, expected {width}", text.len()),
            });
        }
        for ch in text.chars() {
            match ch {
                '0' => cells.push(false),
                '1' => cells.push(true),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unexpected character `{ch}`"),
                    })
                }
            }
        }
    }
    if let Some(extra) = lines.next() {
        if !extra.is_empty() || lines.next().is_some() {
            return Err(Error::Parse {
                line: height + 2,
                msg: "trailing content".into(),
            });
        }
    }
    PatternGrid::new(width, height, cells)
}

pub fn save_pattern(grid: &PatternGrid) -> String {
    let mut out = format!("{} {}\n", grid.width, grid.height);
    for row in grid.cells.chunks(grid.width) {
        for &c in row {
            out.push(if c { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// A sampled training point, zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SamplePoint {
    pub row: usize,
    pub col: usize,
    pub label: bool,
}

/// Stratified sampling without replacement.
///
/// `round(n · black / N)` points are drawn from the black region and the rest
/// from the white region. Each stratum's cells are listed row-major and the
/// first `k` positions of a Fisher–Yates shuffle are taken. Black points come
/// first, then white, each in selection order.
pub fn sample_training_points(grid: &PatternGrid, n: usize, seed: u64) -> Result<Vec<SamplePoint>> {
    let total = grid.len();
    if !(1..=total).contains(&n) {
        return domain(format!("n = {n} outside 1..={total}"));
    }
    let black = grid.black_count();
    let n_black = (2 * n * black + total) / (2 * total);
    let n_white = n - n_black;
    if n_black > black || n_white > total - black {
        return domain(format!(
            "cannot draw {n_black} black / {n_white} white points"
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(n);
    for (label, k) in [(true, n_black), (false, n_white)] {
        let mut stratum: Vec<usize> = (0..total).filter(|&i| grid.cells[i] == label).collect();
        for i in 0..k {
            let j = i + rng.below((stratum.len() - i) as u64) as usize;
            stratum.swap(i, j);
        }
        out.extend(stratum[..k].iter().map(|&i| SamplePoint {
            row: i / grid.width,
            col: i % grid.width,
            label,
        }));
    }
    Ok(out)
}

/// `#`/`.` rendering of a grid, one text row per grid row.
pub fn render_grid(grid: &PatternGrid) -> String {
    let mut out = String::with_capacity(grid.len() + grid.height);
    for row in grid.cells.chunks(grid.width) {
        for &c in row {
            let _ = out.write_char(if c { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of the SplitMix64 generator for seed 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
        let first_1 = SplitMix64::new(1).next_u64();
        assert_ne!(first_1, 0xE220_A839_7B1D_CDAF);
        let a: Vec<u64> = (0..5)
            .scan(SplitMix64::new(99), |r, _| Some(r.next_u64()))
            .collect();
        let b: Vec<u64> = (0..5)
            .scan(SplitMix64::new(99), |r, _| Some(r.next_u64()))
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn spiral_shape() {
        let g = generate_spiral(16).unwrap();
        assert_eq!(g.len(), 256);
        let black = g.black_count();
        assert!(black >= 48 && 256 - black >= 48, "black = {black}");
        assert_eq!(g, generate_spiral(16).unwrap());
        assert!(generate_spiral(3).is_err());
    }

    #[test]
    fn box_shape() {
        let g = generate_box(16).unwrap();
        assert_eq!(g.black_count(), 64);
        assert!(!g.get(0, 0));
        assert!(g.get(8, 8));
        assert!(g.get(4, 4) && !g.get(3, 4) && !g.get(12, 4));
        assert!(generate_box(2).is_err());
    }

    #[test]
    fn pattern_files() {
        let g = load_pattern("2 2\n10\n01").unwrap();
        assert!(g.get(0, 0) && g.get(1, 1) && !g.get(0, 1) && !g.get(1, 0));
        let canonical = "3 2\n101\n000\n";
        assert_eq!(save_pattern(&load_pattern(canonical).unwrap()), canonical);

        let err = |t: &str| match load_pattern(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("2 2\n1\n01"), 2);
        assert_eq!(err("2 2\n10\n0x"), 3);
        assert_eq!(err("2 2\n10\n"), 3);
        assert_eq!(err("2\n10\n01"), 1);
        assert_eq!(err("0 2\n\n\n"), 1);
        assert_eq!(err("2 1\n10\n11\n"), 3);
        assert_eq!(err(""), 1);
    }

    #[test]
    fn sampling_basics() {
        let g = generate_spiral(16).unwrap();
        let all = sample_training_points(&g, 256, 5).unwrap();
        let cells: HashSet<_> = all.iter().map(|p| (p.row, p.col)).collect();
        assert_eq!(cells.len(), 256);

        let pts = sample_training_points(&g, 75, 1).unwrap();
        assert_eq!(pts.len(), 75);
        let cells: HashSet<_> = pts.iter().map(|p| (p.row, p.col)).collect();
        assert_eq!(cells.len(), 75);
        assert!(pts.iter().any(|p| p.label) && pts.iter().any(|p| !p.label));
        assert!(pts.iter().all(|p| g.get(p.row, p.col) == p.label));
        let first_white = pts.iter().position(|p| !p.label).unwrap();
        assert!(pts[first_white..].iter().all(|p| !p.label));

        assert_eq!(pts, sample_training_points(&g, 75, 1).unwrap());
        assert_ne!(pts, sample_training_points(&g, 75, 2).unwrap());
        assert!(sample_training_points(&g, 0, 1).is_err());
        assert!(sample_training_points(&g, 257, 1).is_err());
    }

    #[test]
    fn strata_are_proportional() {
        let g = generate_spiral(16).unwrap();
        let black = g.black_count() as f64;
        for n in 1..=256 {
            let pts = sample_training_points(&g, n, n as u64).unwrap();
            let got = pts.iter().filter(|p| p.label).count() as f64;
            let exact = n as f64 * black / 256.0;
            assert!((got - exact).abs() <= 0.5, "n = {n}");
        }
    }
}
