//! Induction on `m` for: every walk count of length `k >= n` in
//! `P_n`, `n = 2^m - 1`, is even.
//!
//! Each level splits walks around the midpoint `p = 2^(m-1)`. The two halves
//! are copies of `P_{p-1}`; the right half is translated by `v -> v - p`
//! before recursing. Sub-verdicts are memoised on `(m, k, x, y)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::pathwalks::{check_vertex, count_walks_parity, for_each_walk, EnumConfig, PathSpec, Walk};
use crate::report::ParityReport;
use crate::scalar::Gf2;

use super::{class_census, classify, reflect_class3, ClassCensus, ClassTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Why class 1 is even. Coordinates inside `HalfGraph` are those of the half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class1Evidence {
    /// An endpoint is the pivot, or the endpoints lie on opposite sides.
    Empty,
    HalfGraph {
        side: Side,
        x: usize,
        y: usize,
        even: bool,
    },
}

impl Class1Evidence {
    pub fn holds(&self) -> bool {
        match self {
            Class1Evidence::Empty => true,
            Class1Evidence::HalfGraph { even, .. } => *even,
        }
    }
}

/// Why the class-2 walks visiting the pivot at `step` are even in number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class2Evidence {
    /// No walk can visit the pivot exactly once at this step.
    Empty { step: usize },
    /// The walks factor as (one-sided walk) x (one-sided walk); the factor on
    /// `side`, a walk of `length` from `from` to `to` in the half graph, has
    /// an even count by recursion.
    Factor {
        step: usize,
        side: Side,
        length: usize,
        from: usize,
        to: usize,
        even: bool,
    },
}

impl Class2Evidence {
    pub fn holds(&self) -> bool {
        match self {
            Class2Evidence::Empty { .. } => true,
            Class2Evidence::Factor { even, .. } => *even,
        }
    }

    pub fn step(&self) -> usize {
        match self {
            Class2Evidence::Empty { step } | Class2Evidence::Factor { step, .. } => *step,
        }
    }
}

/// Class-3 walks split by the side of their first excursion from the
/// pivot. Reflection swaps the two groups, so they must be equal in size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class3Evidence {
    pub left: BigUint,
    pub right: BigUint,
    /// Number of reflection pairs checked walk by walk, when the length was
    /// small enough to enumerate.
    pub explicit_pairs: Option<u64>,
    pub explicit_ok: bool,
}

impl Class3Evidence {
    pub fn holds(&self) -> bool {
        self.left == self.right && self.explicit_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `m = 1`: `P_1` has no walks of positive length.
    Base,
    Induction {
        pivot: usize,
        class1: Class1Evidence,
        class2: Vec<Class2Evidence>,
        class3: Class3Evidence,
    },
}

impl Certificate {
    pub fn holds(&self) -> bool {
        match self {
            Certificate::Base => true,
            Certificate::Induction {
                class1,
                class2,
                class3,
                ..
            } => class1.holds() && class2.iter().all(Class2Evidence::holds) && class3.holds(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremOptions {
    /// Class-3 pairs are also checked walk by walk with
    /// [`reflect_class3`] when `k` is at most this.
    pub explicit_pairing_cap: usize,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        Self {
            explicit_pairing_cap: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremOutcome {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub x: usize,
    pub y: usize,
    pub certificate: Certificate,
    /// Parity of the walk count from the bit-vector DP.
    pub parity: Gf2,
    pub census: ClassCensus,
    pub exact_count: BigUint,
}

impl TheoremOutcome {
    /// Certificate holds and agrees with the independent parity DP.
    pub fn is_even(&self) -> bool {
        self.certificate.holds() && self.parity == Gf2::ZERO
    }

    pub fn report(&self) -> ParityReport {
        let mut r = ParityReport::new("verify-theorem")
            .param("m", self.m)
            .param("n", self.n)
            .param("k", self.k)
            .param("x", self.x)
            .param("y", self.y);
        r.check("hypothesis k >= n", true, self.k >= self.n, "input");
        match &self.certificate {
            Certificate::Base => {
                r.check("base case P_1", "even", even_word(self.certificate.holds()), "no walks of positive length");
            }
            Certificate::Induction {
                pivot,
                class1,
                class2,
                class3,
            } => {
                let half = pivot - 1;
                let source = match class1 {
                    Class1Evidence::Empty => "empty: endpoints separated by or at the pivot".to_owned(),
                    Class1Evidence::HalfGraph { side, x, y, .. } => {
                        format!("induction on {side} half P_{half}: {x}->{y}")
                    }
                };
                r.check("class 1", "even", even_word(class1.holds()), source);
                for ev in class2 {
                    let source = match ev {
                        Class2Evidence::Empty { .. } => "empty".to_owned(),
                        Class2Evidence::Factor {
                            side,
                            length,
                            from,
                            to,
                            ..
                        } => format!("{side} factor in P_{half}: {from}->{to}, length {length}"),
                    };
                    r.check(
                        format!("class 2 step {}", ev.step()),
                        "even",
                        even_word(ev.holds()),
                        source,
                    );
                }
                let mut source = format!(
                    "reflection pairing: first excursion left {} / right {}",
                    class3.left, class3.right
                );
                if let Some(pairs) = class3.explicit_pairs {
                    source.push_str(&format!(", {pairs} pairs enumerated"));
                }
                r.check("class 3", "even", even_word(class3.holds()), source);
                for (i, c) in self.census.per_step_c2.iter().enumerate() {
                    if class2.get(i).is_some_and(|ev| matches!(ev, Class2Evidence::Factor { .. })) {
                        r.check(
                            format!("census class 2 step {i}"),
                            "even",
                            even_word(!c.bit(0)),
                            format!("first-arrival product = {c}"),
                        );
                    }
                }
                for (name, c) in [("c1", &self.census.c1), ("c2", &self.census.c2), ("c3", &self.census.c3)] {
                    r.check(
                        format!("census {name}"),
                        "even",
                        even_word(!c.bit(0)),
                        format!("class dp = {c}"),
                    );
                }
            }
        }
        r.check(
            "census total",
            &self.exact_count,
            self.census.total(),
            "class dp vs walk-count dp",
        );
        r.check("walk-count parity", 0, self.parity, "bit-vector dp");
        r
    }
}

fn even_word(even: bool) -> &'static str {
    if even {
        "even"
    } else {
        "odd"
    }
}

/// [`theorem_check_with`] under default options.
pub fn theorem_check(m: u32, k: usize, x: usize, y: usize) -> Result<TheoremOutcome> {
    theorem_check_with(m, k, x, y, TheoremOptions::default())
}

/// Checks that the number of walks of length `k` from `x` to `y` in
/// `P_{2^m - 1}` is even, following the three-class induction.
pub fn theorem_check_with(
    m: u32,
    k: usize,
    x: usize,
    y: usize,
    options: TheoremOptions,
) -> Result<TheoremOutcome> {
    let spec = PathSpec::from_exponent(m)?;
    let n = spec.n();
    check_vertex(n, x)?;
    check_vertex(n, y)?;
    if k < n {
        return Err(Error::LengthBelowBound { k, n });
    }
    let mut prover = Prover {
        memo: HashMap::new(),
        options,
    };
    let certificate = prover.certify(m, k, x, y)?;
    Ok(TheoremOutcome {
        m,
        n,
        k,
        x,
        y,
        certificate,
        parity: count_walks_parity(n, x, y, k)?,
        census: class_census(n, (n + 1) / 2, x, y, k)?,
        exact_count: crate::count_walks_exact(n, x, y, k)?,
    })
}

struct Prover {
    memo: HashMap<(u32, usize, usize, usize), bool>,
    options: TheoremOptions,
}

impl Prover {
    fn holds(&mut self, m: u32, k: usize, x: usize, y: usize) -> Result<bool> {
        if let Some(&v) = self.memo.get(&(m, k, x, y)) {
            return Ok(v);
        }
        let v = self.certify(m, k, x, y)?.holds();
        self.memo.insert((m, k, x, y), v);
        Ok(v)
    }

    fn certify(&mut self, m: u32, k: usize, x: usize, y: usize) -> Result<Certificate> {
        let n = (1usize << m) - 1;
        debug_assert!(k >= n && (1..=n).contains(&x) && (1..=n).contains(&y));
        if m == 1 {
            return Ok(Certificate::Base);
        }
        let l = m - 1;
        let pivot = 1usize << l;
        let half = pivot - 1;
        let to_half = |v: usize| -> (Side, usize) {
            if v < pivot {
                (Side::Left, v)
            } else {
                (Side::Right, v - pivot)
            }
        };
        // Neighbour of the pivot on the side of `v`, in half coordinates.
        let gate = |v: usize| -> usize {
            if v < pivot {
                half
            } else {
                1
            }
        };

        let class1 = if x == pivot || y == pivot || (x < pivot) != (y < pivot) {
            Class1Evidence::Empty
        } else {
            let (side, hx) = to_half(x);
            let (_, hy) = to_half(y);
            Class1Evidence::HalfGraph {
                side,
                x: hx,
                y: hy,
                even: self.holds(l, k, hx, hy)?,
            }
        };

        let mut class2 = Vec::with_capacity(k + 1);
        for step in 0..=k {
            let factor = if step == 0 {
                // Starts at the pivot and never returns.
                (x == pivot && y != pivot).then(|| {
                    let (side, hy) = to_half(y);
                    (side, k - 1, gate(y), hy)
                })
            } else if step == k {
                (y == pivot && x != pivot).then(|| {
                    let (side, hx) = to_half(x);
                    (side, k - 1, hx, gate(x))
                })
            } else if x != pivot && y != pivot {
                if step - 1 >= half {
                    let (side, hx) = to_half(x);
                    Some((side, step - 1, hx, gate(x)))
                } else {
                    debug_assert!(k - step - 1 >= half);
                    let (side, hy) = to_half(y);
                    Some((side, k - step - 1, gate(y), hy))
                }
            } else {
                None
            };
            class2.push(match factor {
                None => Class2Evidence::Empty { step },
                Some((side, length, from, to)) => Class2Evidence::Factor {
                    step,
                    side,
                    length,
                    from,
                    to,
                    even: self.holds(l, length, from, to)?,
                },
            });
        }

        let census = class_census(n, pivot, x, y, k)?;
        let (explicit_pairs, explicit_ok) = if k <= self.options.explicit_pairing_cap {
            let (pairs, ok) = check_pairing(n, pivot, x, y, k)?;
            (Some(pairs), ok)
        } else {
            (None, true)
        };
        let class3 = Class3Evidence {
            left: census.c3_left,
            right: census.c3_right,
            explicit_pairs,
            explicit_ok,
        };

        Ok(Certificate::Induction {
            pivot,
            class1,
            class2,
            class3,
        })
    }
}

fn first_excursion_side(w: &Walk, pivot: usize) -> Option<Side> {
    let t = w.visits(pivot).next()?;
    let next = *w.vertices().get(t + 1)?;
    Some(if next < pivot { Side::Left } else { Side::Right })
}

/// Enumerates class-3 walks and checks that reflection pairs each one with a
/// distinct class-3 walk whose first excursion is on the other side.
/// Returns the number of pairs and whether every check passed.
fn check_pairing(n: usize, pivot: usize, x: usize, y: usize, k: usize) -> Result<(u64, bool)> {
    let config = EnumConfig { cap: k };
    let mut class3 = 0u64;
    let mut ok = true;
    let _ = for_each_walk::<()>(n, x, Some(y), k, &config, |vs| {
        let w = Walk::new(vs.to_vec());
        if w.visits(pivot).nth(1).is_none() {
            return ControlFlow::Continue(());
        }
        class3 += 1;
        ok &= match reflect_class3(n, &w, pivot) {
            Ok(image) => {
                image != w
                    && matches!(classify(n, &image, pivot), Ok(c) if c.tag == ClassTag::Class3)
                    && (image.start(), image.end(), image.len()) == (w.start(), w.end(), w.len())
                    && first_excursion_side(&image, pivot) != first_excursion_side(&w, pivot)
                    && reflect_class3(n, &image, pivot).as_ref() == Ok(&w)
            }
            Err(_) => false,
        };
        ControlFlow::Continue(())
    })?;
    ok &= class3 % 2 == 0;
    Ok((class3 / 2, ok))
}
