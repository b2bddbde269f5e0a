//! Truth-table certificates for functionality upper bounds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Widest truth table a witness may carry (`2^24` entries).
pub const MAX_WITNESS_ARITY: usize = 24;

/// How a witness was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessOrigin {
    PairDistinguishers,
    PairNondistinguishers,
    StripeCase1,
    StripeCase2,
    SmallN,
    Exhaustive,
}

impl WitnessOrigin {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessOrigin::PairDistinguishers => "pair-distinguishers",
            WitnessOrigin::PairNondistinguishers => "pair-nondistinguishers",
            WitnessOrigin::StripeCase1 => "stripe-case1",
            WitnessOrigin::StripeCase2 => "stripe-case2",
            WitnessOrigin::SmallN => "small-n",
            WitnessOrigin::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for WitnessOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WitnessOrigin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use WitnessOrigin::*;
        [PairDistinguishers, PairNondistinguishers, StripeCase1, StripeCase2, SmallN, Exhaustive]
            .into_iter()
            .find(|o| o.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown witness origin {s:?}")))
    }
}

/// `target` is a function of `args`: every other vertex `z` is adjacent to
/// `target` iff `table[profile(z)]`, where bit `i` of `profile(z)` is the
/// adjacency of `z` to `args[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WitnessFile", into = "WitnessFile")]
pub struct Witness {
    pub target: usize,
    pub args: Vec<usize>,
    pub table: Vec<bool>,
    pub origin: WitnessOrigin,
}

/// A vertex whose adjacency to the target disagrees with the witness table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessViolation {
    pub vertex: usize,
    pub profile: usize,
}

fn check_arity(k: usize) -> Result<()> {
    if k > MAX_WITNESS_ARITY {
        return Err(Error::InvalidParameter(format!(
            "witness arity {k} exceeds the truth-table limit {MAX_WITNESS_ARITY}"
        )));
    }
    Ok(())
}

/// Adjacency pattern of `z` to `args`, bit `i` for `args[i]`.
pub fn profile(g: &Graph, args: &[usize], z: usize) -> usize {
    args.iter().enumerate().fold(0, |m, (i, &a)| m | (usize::from(g.has_edge(a, z)) << i))
}

impl Witness {
    /// Builds a table from an explicit rule over profiles.
    pub fn from_rule(
        target: usize,
        args: Vec<usize>,
        origin: WitnessOrigin,
        rule: impl Fn(usize) -> bool,
    ) -> Result<Self> {
        check_arity(args.len())?;
        let table = (0..1usize << args.len()).map(rule).collect();
        Ok(Self { target, args, table, origin })
    }

    /// Reads the table off the graph; unobserved profiles map to `false`.
    ///
    /// Fails if two vertices share a profile but disagree on adjacency to the target.
    pub fn from_observations(g: &Graph, target: usize, args: Vec<usize>, origin: WitnessOrigin) -> Result<Self> {
        check_arity(args.len())?;
        let mut table = vec![false; 1 << args.len()];
        let mut seen: Vec<Option<usize>> = vec![None; 1 << args.len()];
        for z in 0..g.n() {
            if z == target || args.contains(&z) {
                continue;
            }
            let m = profile(g, &args, z);
            let adj = g.has_edge(target, z);
            match seen[m] {
                None => {
                    seen[m] = Some(z);
                    table[m] = adj;
                }
                Some(prev) if table[m] != adj => {
                    return Err(Error::Internal(format!(
                        "vertex {target} is not a function of {args:?}: {prev} and {z} share profile {m}"
                    )));
                }
                Some(_) => {}
            }
        }
        Ok(Self { target, args, table, origin })
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    /// Checks the table against every vertex outside `args ∪ {target}`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), WitnessViolation> {
        for z in 0..g.n() {
            if z == self.target || self.args.contains(&z) {
                continue;
            }
            let m = profile(g, &self.args, z);
            if self.table[m] != g.has_edge(self.target, z) {
                return Err(WitnessViolation { vertex: z, profile: m });
            }
        }
        Ok(())
    }

    /// Structural checks plus [`Witness::validate`], as an `Internal` error.
    pub(crate) fn checked(self, g: &Graph) -> Result<Self> {
        self.check_shape(g.n())?;
        self.validate(g).map_err(|v| {
            Error::Internal(format!(
                "{} witness for vertex {} fails at vertex {} (profile {})",
                self.origin, self.target, v.vertex, v.profile
            ))
        })?;
        Ok(self)
    }

    fn check_shape(&self, n: usize) -> Result<()> {
        if self.target >= n {
            return Err(Error::VertexOutOfRange { vertex: self.target, n });
        }
        for (i, &a) in self.args.iter().enumerate() {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if a == self.target {
                return Err(Error::TargetInSet(a));
            }
            if self.args[..i].contains(&a) {
                return Err(Error::InvalidParameter(format!("argument {a} repeated")));
            }
        }
        if self.table.len() != 1 << self.args.len() {
            return Err(Error::InvalidParameter("truth table length is not 2^k".into()));
        }
        Ok(())
    }

    pub fn table_bits(&self) -> String {
        self.table.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// `{"target": id, "args": [ids], "table_bits": "0/1 string of length 2^k", "origin": string}`
#[derive(Serialize, Deserialize)]
struct WitnessFile {
    target: usize,
    args: Vec<usize>,
    table_bits: String,
    origin: WitnessOrigin,
}

impl TryFrom<WitnessFile> for Witness {
    type Error = Error;

    fn try_from(f: WitnessFile) -> Result<Self> {
        check_arity(f.args.len())?;
        if f.table_bits.len() != 1 << f.args.len() {
            return Err(Error::InvalidParameter(format!(
                "table_bits has length {}, expected {}",
                f.table_bits.len(),
                1usize << f.args.len()
            )));
        }
        let table = f
            .table_bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidParameter(format!("bad table character {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(Witness { target: f.target, args: f.args, table, origin: f.origin })
    }
}

impl From<Witness> for WitnessFile {
    fn from(w: Witness) -> Self {
        let table_bits = w.table_bits();
        WitnessFile { target: w.target, args: w.args, table_bits, origin: w.origin }
    }
}
