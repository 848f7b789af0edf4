//! Named tournament families and constructions.
//!
//! All generators place vertex `i` (0-based) at label `i + 1`.

use std::fmt;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// `TT_n`: vertex `u` beats `v` iff `u < v`, so scores decrease with the label.
pub fn transitive(n: usize) -> Tournament {
    Tournament::from_pairs(n, |_, _| true)
}

/// The cyclic triangle `1 → 2 → 3 → 1`.
pub fn c3() -> Tournament {
    circular(3, &[1]).expect("{1} is a valid residue set mod 3")
}

/// Circular tournament: `i → j` iff `(j - i) mod n ∈ residues`.
///
/// `residues` must contain exactly one of `±r` for every non-zero `r` mod `n`
/// (which forces `n` odd).
pub fn circular(n: usize, residues: &[usize]) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::Residues { n, reason: "order must be positive".into() });
    }
    let mut in_set = vec![false; n];
    for &r in residues {
        let r = r % n;
        if r == 0 {
            return Err(Error::Residues { n, reason: "0 is not allowed".into() });
        }
        in_set[r] = true;
    }
    for r in 1..n {
        if in_set[r] == in_set[n - r] {
            return Err(Error::Residues {
                n,
                reason: format!("exactly one of {r} and {} must be present", n - r),
            });
        }
    }
    Ok(Tournament::from_pairs(n, |u, v| in_set[(v - u) % n]))
}

/// The Paley tournament on 7 vertices, induced by the quadratic residues `{1,2,4}`.
pub fn st7() -> Tournament {
    circular(7, &[1, 2, 4]).expect("quadratic residues mod 7")
}

/// `ST_7` with vertex 1 deleted and the rest relabelled `1..6`.
pub fn st6() -> Tournament {
    st7().remove_vertex(0)
}

/// The regular tournament of order 5.
pub fn rt5() -> Tournament {
    circular(5, &[1, 2]).expect("{1,2} is a valid residue set mod 5")
}

/// Appends `p` (label `n+1`) and `q` (label `n+2`) with `q → p`, and
/// `p → t → q` for every vertex `t` of `inner`.
pub fn pq(inner: &Tournament) -> Tournament {
    let m = inner.n();
    let (p, q) = (m, m + 1);
    Tournament::from_pairs(m + 2, |u, v| match (u, v) {
        (u, v) if v < m => inner.beats(u, v),
        (_, v) if v == p => false, // t loses to p
        (u, v) if u < m && v == q => true,
        (u, v) if u == p && v == q => false,
        _ => unreachable!(),
    })
}

/// Strong tournament with exactly three minimal feedback vertex sets.
///
/// For `n = 3` this is `C_3`. Otherwise vertices `1..n-2` form `TT_{n-2}`
/// with decreasing scores, `u₁ = n-1` and `u₂ = n` with `u₁ → u₂`, every
/// vertex in `2..n-2` beats both `uᵢ`, and both `uᵢ` beat vertex `1`.
pub fn u_family(n: usize) -> Result<Tournament> {
    match n {
        0..=2 => Err(Error::Parameter(format!("u_family needs n >= 3, got {n}"))),
        3 => Ok(c3()),
        _ => {
            let (u1, u2) = (n - 2, n - 1);
            Ok(Tournament::from_pairs(n, |u, v| {
                if v < u1 || (u == u1 && v == u2) {
                    true
                } else {
                    // v is one of the special vertices
                    u != 0
                }
            }))
        }
    }
}

/// `T1 + T2`: the vertices of `first` come first and beat every vertex of `second`.
pub fn disjoint_sum(first: &Tournament, second: &Tournament) -> Tournament {
    let m = first.n();
    Tournament::from_pairs(m + second.n(), |u, v| {
        if v < m {
            first.beats(u, v)
        } else if u < m {
            true
        } else {
            second.beats(u - m, v - m)
        }
    })
}

/// `k` copies of `t` summed in order.
pub fn repeated_sum(t: &Tournament, k: usize) -> Tournament {
    let mut acc = Tournament::from_pairs(0, |_, _| true);
    for _ in 0..k {
        acc = disjoint_sum(&acc, t);
    }
    acc
}

/// Uniformly random labelled tournament.
///
/// The stream is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`.
/// Pairs `(u, v)` with `u < v` are visited in row-major order and one
/// `next_u32()` is drawn per pair; `u` beats `v` iff its lowest bit is 1.
pub fn random(n: usize, seed: u64) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_pairs(n, |_, _| rng.next_u32() & 1 == 1)
}

/// Tournament from a bit pattern over the `C(n,2)` pairs in row-major
/// order: bit `k` set means the `k`-th pair `(u, v)`, `u < v`, has `u → v`.
pub fn from_arc_pattern(n: usize, pattern: u64) -> Tournament {
    let mut k = 0;
    Tournament::from_pairs(n, |_, _| {
        let bit = pattern >> k & 1 == 1;
        k += 1;
        bit
    })
}

/// A parsed generator expression, e.g. `pq(st7)`, `sum(st7,st7)`,
/// `circular(7,1,2,4)`, `random(10,42)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Transitive(usize),
    C3,
    Circular(usize, Vec<usize>),
    St7,
    St6,
    Rt5,
    U(usize),
    Pq(Box<GeneratorSpec>),
    Sum(Vec<GeneratorSpec>),
    Copies(Box<GeneratorSpec>, usize),
    Reverse(Box<GeneratorSpec>),
    Random { n: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Tournament> {
        Ok(match self {
            GeneratorSpec::Transitive(n) => transitive(*n),
            GeneratorSpec::C3 => c3(),
            GeneratorSpec::Circular(n, l) => circular(*n, l)?,
            GeneratorSpec::St7 => st7(),
            GeneratorSpec::St6 => st6(),
            GeneratorSpec::Rt5 => rt5(),
            GeneratorSpec::U(n) => u_family(*n)?,
            GeneratorSpec::Pq(inner) => pq(&inner.build()?),
            GeneratorSpec::Sum(parts) => {
                let mut acc = transitive(0);
                for p in parts {
                    acc = disjoint_sum(&acc, &p.build()?);
                }
                acc
            }
            GeneratorSpec::Copies(inner, k) => repeated_sum(&inner.build()?, *k),
            GeneratorSpec::Reverse(inner) => inner.build()?.reverse(),
            GeneratorSpec::Random { n, seed } => random(*n, *seed),
        })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Transitive(n) => write!(f, "tt({n})"),
            GeneratorSpec::C3 => write!(f, "c3"),
            GeneratorSpec::Circular(n, l) => {
                write!(f, "circular({n}")?;
                for r in l {
                    write!(f, ",{r}")?;
                }
                write!(f, ")")
            }
            GeneratorSpec::St7 => write!(f, "st7"),
            GeneratorSpec::St6 => write!(f, "st6"),
            GeneratorSpec::Rt5 => write!(f, "rt5"),
            GeneratorSpec::U(n) => write!(f, "u({n})"),
            GeneratorSpec::Pq(inner) => write!(f, "pq({inner})"),
            GeneratorSpec::Sum(parts) => {
                write!(f, "sum(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            GeneratorSpec::Copies(inner, k) => write!(f, "copies({inner},{k})"),
            GeneratorSpec::Reverse(inner) => write!(f, "reverse({inner})"),
            GeneratorSpec::Random { n, seed } => write!(f, "random({n},{seed})"),
        }
    }
}

enum Arg {
    Int(u64),
    Spec(GeneratorSpec),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parameter(format!("generator expression {:?}: {msg} at offset {}", self.src, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn arg(&mut self) -> Result<Arg> {
        let w = self.word().to_string();
        if w.is_empty() {
            return Err(self.err("expected a name or integer"));
        }
        if let Ok(i) = w.parse::<u64>() {
            return Ok(Arg::Int(i));
        }
        self.spec_named(&w).map(Arg::Spec)
    }

    fn spec(&mut self) -> Result<GeneratorSpec> {
        match self.arg()? {
            Arg::Spec(s) => Ok(s),
            Arg::Int(_) => Err(self.err("expected a generator name")),
        }
    }

    fn spec_named(&mut self, name: &str) -> Result<GeneratorSpec> {
        let mut args = Vec::new();
        if self.eat('(') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.err("expected ',' or ')'"));
                }
            }
        }
        let int = |a: &Arg| match a {
            Arg::Int(i) => Ok(*i),
            Arg::Spec(_) => Err(self.err("expected an integer argument")),
        };
        let spec = |a: Arg| match a {
            Arg::Spec(s) => Ok(s),
            Arg::Int(_) => Err(self.err("expected a generator argument")),
        };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(self.err(&format!("{name} takes {k} argument(s), got {}", args.len())))
            }
        };
        Ok(match name {
            "tt" | "transitive" => {
                arity(1)?;
                GeneratorSpec::Transitive(int(&args[0])? as usize)
            }
            "c3" => {
                arity(0)?;
                GeneratorSpec::C3
            }
            "st7" => {
                arity(0)?;
                GeneratorSpec::St7
            }
            "st6" => {
                arity(0)?;
                GeneratorSpec::St6
            }
            "rt5" => {
                arity(0)?;
                GeneratorSpec::Rt5
            }
            "u" | "u_family" => {
                arity(1)?;
                GeneratorSpec::U(int(&args[0])? as usize)
            }
            "circular" => {
                if args.is_empty() {
                    return Err(self.err("circular needs an order and residues"));
                }
                let n = int(&args[0])? as usize;
                let l = args[1..].iter().map(|a| int(a).map(|r| r as usize)).collect::<Result<_>>()?;
                GeneratorSpec::Circular(n, l)
            }
            "random" => {
                arity(2)?;
                GeneratorSpec::Random { n: int(&args[0])? as usize, seed: int(&args[1])? }
            }
            "pq" => {
                arity(1)?;
                GeneratorSpec::Pq(Box::new(spec(args.pop().unwrap())?))
            }
            "reverse" => {
                arity(1)?;
                GeneratorSpec::Reverse(Box::new(spec(args.pop().unwrap())?))
            }
            "copies" => {
                arity(2)?;
                let k = int(&args[1])? as usize;
                GeneratorSpec::Copies(Box::new(spec(args.swap_remove(0))?), k)
            }
            "sum" => GeneratorSpec::Sum(args.into_iter().map(spec).collect::<Result<_>>()?),
            other => return Err(self.err(&format!("unknown generator {other:?}"))),
        })
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}
