//! Paths and formal sums of paths in the quiver.
//!
//! The relations of the algebra are stated in terms of a few composite
//! paths built once per quiver:
//!
//! - `ff` / `gg`: the compositions along the doubled chain between vertex 1
//!   and the split vertex (trivial when the split is at 1);
//! - `an[t]`: the anticlockwise composition from the star down to chain
//!   vertex `t`;
//! - `pr[v]`: the distinguished loop-ish composition through the horns,
//!   based at `v`;
//! - `clr[t]`: the clockwise composition from the star to chain vertex `t`.
//!
//! Two presentations differ only in how the horn passage is written: the
//! moduli presentation picks a single horn per composite, the symmetric one
//! averages both horns with coefficient one half.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::arith::{rat, Rational};
use crate::contfrac::CaseTag;
use crate::error::{Error, Result};
use crate::quiver::{Quiver, VertexTag};

/// Which presentation of the algebra to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// Single-horn composites; coefficients stay integral.
    Moduli,
    /// Horn-averaged composites; coefficients may be half-integral.
    Symmetric,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Presentation::Moduli => write!(f, "moduli"),
            Presentation::Symmetric => write!(f, "symmetric"),
        }
    }
}

/// A composable sequence of arrows; an empty sequence is the trivial path
/// at `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    pub source: VertexTag,
    pub target: VertexTag,
    pub arrows: Vec<String>,
}

impl PathWord {
    /// The trivial path at a vertex.
    pub fn trivial(at: VertexTag) -> Self {
        PathWord {
            source: at,
            target: at,
            arrows: Vec::new(),
        }
    }

    /// `self` followed by `other` (left-to-right composition).
    pub fn then(&self, other: &PathWord) -> PathWord {
        assert_eq!(
            self.target, other.source,
            "paths compose only head-to-tail"
        );
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().cloned());
        PathWord {
            source: self.source,
            target: other.target,
            arrows,
        }
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e_{{{}}}", self.source)
        } else {
            write!(f, "{}", self.arrows.join("*"))
        }
    }
}

/// A formal rational combination of parallel paths.
pub type PathSum = Vec<(Rational, PathWord)>;

/// Builds a validated path from `start` through the named arrows.
pub fn path(quiver: &Quiver, start: VertexTag, arrows: &[&str]) -> Result<PathWord> {
    let mut at = start;
    let mut names = Vec::with_capacity(arrows.len());
    for name in arrows {
        let arrow = quiver.arrow(name)?;
        if arrow.source != at {
            return Err(Error::PathNotComposable {
                name: (*name).to_string(),
                expected: at.to_string(),
                found: arrow.source.to_string(),
            });
        }
        at = arrow.target;
        names.push((*name).to_string());
    }
    Ok(PathWord {
        source: start,
        target: at,
        arrows: names,
    })
}

/// Scales every coefficient of a path sum.
pub fn scale(sum: &PathSum, by: &Rational) -> PathSum {
    sum.iter()
        .map(|(c, w)| (c * by, w.clone()))
        .collect()
}

/// Bilinear product of two path sums (left-to-right composition).
pub fn mul(a: &PathSum, b: &PathSum) -> PathSum {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ca, wa) in a {
        for (cb, wb) in b {
            out.push((ca * cb, wa.then(wb)));
        }
    }
    out
}

/// The composite paths the relations are written in.
#[derive(Clone, Debug)]
pub struct CompositePaths {
    /// Chain ascent from vertex 1 to the split vertex.
    pub ff: PathWord,
    /// Chain descent from the split vertex to vertex 1.
    pub gg: PathWord,
    /// Anticlockwise compositions from the star, keyed by chain target.
    pub an: BTreeMap<usize, PathSum>,
    /// Horn composites based at a vertex.
    pub pr: BTreeMap<VertexTag, PathSum>,
    /// Clockwise compositions from the star, keyed by chain target.
    pub clr: BTreeMap<usize, PathSum>,
}

fn f_name(s: VertexTag, t: VertexTag) -> String {
    format!("f_{{{s},{t}}}")
}

fn g_name(s: VertexTag, t: VertexTag) -> String {
    format!("g_{{{s},{t}}}")
}

fn a_name(s: VertexTag, t: VertexTag) -> String {
    format!("a_{{{s},{t}}}")
}

fn c_name(s: VertexTag, t: VertexTag) -> String {
    format!("c_{{{s},{t}}}")
}

fn single(quiver: &Quiver, start: VertexTag, arrows: &[String]) -> PathWord {
    let names: Vec<&str> = arrows.iter().map(String::as_str).collect();
    path(quiver, start, &names).expect("composite paths are composable by construction")
}

/// The two horn passages as loops at vertex 1.
fn horn_loops(quiver: &Quiver) -> (PathWord, PathWord) {
    let one = VertexTag::Chain(1);
    let plus = single(
        quiver,
        one,
        &[f_name(one, VertexTag::Plus), g_name(VertexTag::Plus, one)],
    );
    let minus = single(
        quiver,
        one,
        &[f_name(one, VertexTag::Minus), g_name(VertexTag::Minus, one)],
    );
    (plus, minus)
}

/// Which horn a single-horn composite passes through.
#[derive(Clone, Copy)]
enum Horn {
    Plus,
    Minus,
}

fn horn_passage(quiver: &Quiver, presentation: Presentation, horn: Horn) -> PathSum {
    let (plus, minus) = horn_loops(quiver);
    match presentation {
        Presentation::Moduli => {
            let word = match horn {
                Horn::Plus => plus,
                Horn::Minus => minus,
            };
            vec![(Rational::one(), word)]
        }
        Presentation::Symmetric => {
            let half = rat(1) / rat(2);
            vec![(half.clone(), plus), (half, minus)]
        }
    }
}

/// Builds all composite paths for a quiver in one presentation.
pub fn composite_paths(quiver: &Quiver, presentation: Presentation) -> CompositePaths {
    let nu = quiver.params.nu;
    let n_len = quiver.chain_len();
    let star = VertexTag::Star;
    let split = match quiver.params.case {
        CaseTag::A => nu,
        _ => n_len - 1,
    };

    // Chain ascent/descent between vertex 1 and the split vertex.
    let mut ff_arrows = Vec::new();
    let mut gg_arrows = Vec::new();
    for t in 1..split {
        ff_arrows.push(f_name(VertexTag::Chain(t), VertexTag::Chain(t + 1)));
    }
    for t in (1..split).rev() {
        gg_arrows.push(g_name(VertexTag::Chain(t + 1), VertexTag::Chain(t)));
    }
    let ff = single(quiver, VertexTag::Chain(1), &ff_arrows);
    let gg = single(quiver, VertexTag::Chain(split), &gg_arrows);

    let split_tag = VertexTag::Chain(split);
    let next_tag = VertexTag::Chain(split + 1);
    let wrap = |pre: &PathWord, sandwich: &PathSum, post: &PathWord| -> PathSum {
        sandwich
            .iter()
            .map(|(c, w)| (c.clone(), pre.then(w).then(post)))
            .collect()
    };

    let mut an = BTreeMap::new();
    let mut pr = BTreeMap::new();
    let mut clr = BTreeMap::new();

    match quiver.params.case {
        CaseTag::A => {
            // Anticlockwise from the star through the closing arrow, then
            // stepping down to each tail vertex.
            for t in nu + 1..=n_len {
                let mut arrows = vec![a_name(star, VertexTag::Chain(n_len))];
                for s in (t + 1..=n_len).rev() {
                    arrows.push(a_name(VertexTag::Chain(s), VertexTag::Chain(s - 1)));
                }
                an.insert(t, vec![(Rational::one(), single(quiver, star, &arrows))]);
            }

            let plus = horn_passage(quiver, presentation, Horn::Plus);
            let minus = horn_passage(quiver, presentation, Horn::Minus);

            let pr_pre = single(quiver, next_tag, &[f_name(next_tag, split_tag)]).then(&gg);
            let pr_post = ff.then(&single(quiver, split_tag, &[g_name(split_tag, next_tag)]));
            pr.insert(next_tag, wrap(&pr_pre, &plus, &pr_post));

            let clr_pre = single(quiver, star, &[f_name(star, split_tag)]).then(&gg);
            clr.insert(split, wrap(&clr_pre, &minus, &ff));
            let clr_next = wrap(&clr_pre, &plus, &pr_post);
            clr.insert(split + 1, clr_next.clone());
            let mut extended = clr_next;
            for t in split + 2..=n_len {
                let step = single(
                    quiver,
                    VertexTag::Chain(t - 1),
                    &[c_name(VertexTag::Chain(t - 1), VertexTag::Chain(t))],
                );
                extended = extended
                    .iter()
                    .map(|(c, w)| (c.clone(), w.then(&step)))
                    .collect();
                clr.insert(t, extended.clone());
            }
        }
        _ => {
            // Boundary case: a single half-weight anticlockwise composite
            // through the split.
            let half = rat(1) / rat(2);
            let an_word = single(
                quiver,
                star,
                &[f_name(star, split_tag), g_name(split_tag, next_tag)],
            );
            an.insert(n_len, vec![(half, an_word)]);

            let plus = horn_passage(quiver, presentation, Horn::Plus);
            let minus = horn_passage(quiver, presentation, Horn::Minus);

            let from_star = single(quiver, star, &[f_name(star, split_tag)]).then(&gg);
            let from_top = single(quiver, next_tag, &[f_name(next_tag, split_tag)]).then(&gg);
            let to_star = ff.then(&single(quiver, split_tag, &[g_name(split_tag, star)]));
            let to_top = ff.then(&single(quiver, split_tag, &[g_name(split_tag, next_tag)]));

            pr.insert(star, wrap(&from_star, &minus, &to_star));
            pr.insert(next_tag, wrap(&from_top, &plus, &to_top));
            clr.insert(n_len, wrap(&from_star, &plus, &to_top));
        }
    }

    CompositePaths { ff, gg, an, pr, clr }
}
