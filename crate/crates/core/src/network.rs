//! Instantaneously trained corner-classification network.
//!
//! One hidden unit per training sample, weights read straight off the sample.
//! The same rules cover real (`dim = 1`, alphabet {0, 1}), complex
//! (`dim = 2`, {0, 1, i, 1+i}) and quaternion (`dim = 4`, all 16 symbols)
//! inputs.
//!
//! For a stored symbol `a` the input weight is `conj(2a − u)`, where `u` has a
//! one on every active channel. The scalar part of `w·x` then scores +1 for
//! every channel where `x` and `a` are both set and −1 for every channel set
//! in `x` only, so with bias weight `r − s + 1` a unit's net input is
//! `r + 1 − d`, `d` being the channel Hamming distance to the stored vector.
//! The unit fires exactly when `d ≤ r`.

use std::fmt::Write as _;

use crate::algebra::{Quaternion, Symbol};
use crate::error::{domain, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainingSample {
    pub input: Vec<Symbol>,
    pub outputs: Vec<bool>,
}

impl TrainingSample {
    pub fn new(input: Vec<Symbol>, outputs: Vec<bool>) -> Self {
        TrainingSample { input, outputs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiddenUnit {
    pub weights: Vec<Quaternion>,
    pub bias_weight: i64,
    /// +1 where the sample's output bit was 1, −1 otherwise.
    pub output_weights: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainedNetwork {
    pub r: u32,
    pub dim: usize,
    pub input_len: usize,
    pub output_count: usize,
    pub hidden: Vec<HiddenUnit>,
}

fn active_channels(dim: usize) -> Result<Quaternion> {
    match dim {
        1 => Ok(Quaternion::new(1, 0, 0, 0)),
        2 => Ok(Quaternion::new(1, 1, 0, 0)),
        4 => Ok(Quaternion::new(1, 1, 1, 1)),
        _ => domain(format!("dim must be 1, 2 or 4, got {dim}")),
    }
}

fn in_alphabet(s: Symbol, dim: usize) -> bool {
    s.mask() >> dim == 0
}

fn check_alphabet(input: &[Symbol], dim: usize) -> Result<()> {
    match input.iter().find(|&&s| !in_alphabet(s, dim)) {
        Some(s) => domain(format!("symbol `{s}` outside the dim-{dim} alphabet")),
        None => Ok(()),
    }
}

pub fn weight_for_symbol(a: Symbol, dim: usize) -> Result<Quaternion> {
    let u = active_channels(dim)?;
    if !in_alphabet(a, dim) {
        return domain(format!("symbol `{a}` outside the dim-{dim} alphabet"));
    }
    Ok((a.value().scale(2) - u).conj())
}

/// Number of unit components across the vector.
pub fn s_value(input: &[Symbol]) -> i64 {
    input.iter().map(|s| s.value().norm_sq()).sum()
}

/// Hamming distance over the 4-bit channel masks.
pub fn channel_distance(x: &[Symbol], y: &[Symbol]) -> Result<u32> {
    if x.len() != y.len() {
        return domain(format!("length mismatch: {} vs {}", x.len(), y.len()));
    }
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| (a.mask() ^ b.mask()).count_ones())
        .sum())
}

pub fn step(v: i64) -> bool {
    v > 0
}

/// Trains in a single pass over `samples`. Samples are read once and not kept.
pub fn train(samples: &[TrainingSample], r: u32, dim: usize) -> Result<TrainedNetwork> {
    active_channels(dim)?;
    let first = samples
        .first()
        .ok_or_else(|| Error::Domain("no training samples".into()))?;
    let (input_len, output_count) = (first.input.len(), first.outputs.len());
    let mut hidden = Vec::with_capacity(samples.len());
    for (n, sample) in samples.iter().enumerate() {
        if sample.input.len() != input_len || sample.outputs.len() != output_count {
            return domain(format!(
                "sample {n} has shape {}→{}, expected {input_len}→{output_count}",
                sample.input.len(),
                sample.outputs.len()
            ));
        }
        let weights = sample
            .input
            .iter()
            .map(|&a| weight_for_symbol(a, dim))
            .collect::<Result<Vec<_>>>()?;
        let output_weights = sample
            .outputs
            .iter()
            .map(|&bit| if bit { 1 } else { -1 })
            .collect();
        hidden.push(HiddenUnit {
            weights,
            bias_weight: i64::from(r) - s_value(&sample.input) + 1,
            output_weights,
        });
    }
    Ok(TrainedNetwork {
        r,
        dim,
        input_len,
        output_count,
        hidden,
    })
}

/// Net input of one hidden unit. `input_with_bias` ends with the bias symbol 1.
pub fn hidden_net(unit: &HiddenUnit, input_with_bias: &[Symbol]) -> Result<i64> {
    let Some((&bias, input)) = input_with_bias.split_last() else {
        return domain("empty input");
    };
    if input.len() != unit.weights.len() {
        return domain(format!(
            "input has {} elements plus bias, unit expects {}",
            input.len(),
            unit.weights.len()
        ));
    }
    if bias != Symbol::ONE {
        return domain(format!(
            "last input element must be the bias symbol 1, got `{bias}`"
        ));
    }
    Ok(net_unchecked(unit, input))
}

fn net_unchecked(unit: &HiddenUnit, input: &[Symbol]) -> i64 {
    let dot: i64 = unit
        .weights
        .iter()
        .zip(input)
        .map(|(&w, &x)| (w * x.value()).scalar())
        .sum();
    dot + unit.bias_weight
}

impl TrainedNetwork {
    fn check_input(&self, input: &[Symbol]) -> Result<()> {
        if input.len() != self.input_len {
            return domain(format!(
                "input has {} elements, network expects {}",
                input.len(),
                self.input_len
            ));
        }
        check_alphabet(input, self.dim)
    }

    /// Per-unit fire flags, in training order.
    pub fn hidden_fires(&self, input: &[Symbol]) -> Result<Vec<bool>> {
        self.check_input(input)?;
        Ok(self
            .hidden
            .iter()
            .map(|h| step(net_unchecked(h, input)))
            .collect())
    }

    pub fn infer(&self, input: &[Symbol]) -> Result<Vec<bool>> {
        let fires = self.hidden_fires(input)?;
        let mut sums = vec![0i64; self.output_count];
        for (unit, _) in self.hidden.iter().zip(&fires).filter(|(_, &f)| f) {
            for (sum, &w) in sums.iter_mut().zip(&unit.output_weights) {
                *sum += i64::from(w);
            }
        }
        Ok(sums.into_iter().map(step).collect())
    }

    /// Line-oriented text dump. Reads back with [`TrainedNetwork::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ccnet 1");
        let _ = writeln!(out, "r {}", self.r);
        let _ = writeln!(out, "dim {}", self.dim);
        let _ = writeln!(out, "input_len {}", self.input_len);
        let _ = writeln!(out, "outputs {}", self.output_count);
        let _ = writeln!(out, "units {}", self.hidden.len());
        for unit in &self.hidden {
            let weights: Vec<String> = unit.weights.iter().map(Quaternion::to_string).collect();
            let outs: Vec<&str> = unit
                .output_weights
                .iter()
                .map(|&w| if w > 0 { "+" } else { "-" })
                .collect();
            let _ = writeln!(
                out,
                "{} | {} | {}",
                unit.bias_weight,
                weights.join(" "),
                outs.join("")
            );
        }
        out
    }

    pub fn from_text(text: &str) -> Result<TrainedNetwork> {
        let mut lines = text.lines().enumerate().map(|(n, l)| (n + 1, l));
        let mut header = |key: &str| -> Result<usize> {
            let (line, l) = lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing `{key}` line"),
            })?;
            let err = || Error::Parse {
                line,
                msg: format!("expected `{key} <integer>`"),
            };
            let rest = l
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix(' '))
                .ok_or_else(err)?;
            rest.parse().map_err(|_| err())
        };
        if header("ccnet")? != 1 {
            return Err(Error::Parse {
                line: 1,
                msg: "unsupported version".into(),
            });
        }
        let r = header("r")?;
        let dim = header("dim")?;
        let input_len = header("input_len")?;
        let output_count = header("outputs")?;
        let units = header("units")?;
        active_channels(dim)?;
        let r = u32::try_from(r).map_err(|_| Error::Parse {
            line: 2,
            msg: "r too large".into(),
        })?;
        let mut hidden = Vec::with_capacity(units);
        for (line, l) in lines {
            let err = |msg: &str| Error::Parse {
                line,
                msg: msg.to_string(),
            };
            let mut parts = l.split(" | ");
            let (Some(bias), Some(weights), Some(outs), None) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(err("expected `bias | weights | outputs`"));
            };
            let bias_weight = bias.parse().map_err(|_| err("bad bias weight"))?;
            let weights = if weights.is_empty() {
                Vec::new()
            } else {
                weights
                    .split(' ')
                    .map(|w| w.parse::<Quaternion>().map_err(|_| err("bad weight")))
                    .collect::<Result<Vec<_>>>()?
            };
            let output_weights = outs
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    _ => Err(err("output weights must be `+` or `-`")),
                })
                .collect::<Result<Vec<i8>>>()?;
            if weights.len() != input_len || output_weights.len() != output_count {
                return Err(err("unit shape does not match header"));
            }
            hidden.push(HiddenUnit {
                weights,
                bias_weight,
                output_weights,
            });
        }
        if hidden.len() != units {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!("expected {units} units, found {}", hidden.len()),
            });
        }
        Ok(TrainedNetwork {
            r,
            dim,
            input_len,
            output_count,
            hidden,
        })
    }
}

pub fn infer(net: &TrainedNetwork, input: &[Symbol]) -> Result<Vec<bool>> {
    net.infer(input)
}

pub fn hidden_fires(net: &TrainedNetwork, input: &[Symbol]) -> Result<Vec<bool>> {
    net.hidden_fires(input)
}
