//! Generates the defining relations of the algebra from the quiver.
//!
//! The relations come in blocks, emitted in a fixed order:
//!
//! - a starting relation identifying the two ways from the star into the
//!   tail (generic case only);
//! - the preprojective block on the doubled chain: vanishing 2-cycles at
//!   the horns and around the star, and mesh relations at the doubled
//!   vertices;
//! - one block per tail vertex, equating clockwise and anticlockwise
//!   passages; vertices with extra arrows contribute a ladder of relations
//!   interleaving the extra arrows with the clockwise/anticlockwise
//!   composites.
//!
//! Every relation is stored as a canonicalized formal sum of parallel
//! paths: like words merged, words sorted by length then lexicographically,
//! leading coefficient positive. A relation holds in the algebra when the
//! sum is declared zero.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{rat, Rational};
use crate::contfrac::CaseTag;
use crate::error::Result;
use crate::quiver::paths::{mul, path, scale};
use crate::quiver::{CompositePaths, PathSum, PathWord, Presentation, Quiver, VertexTag};

/// A single defining relation: `terms = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    /// Stable identifier naming the block the relation comes from.
    pub label: String,
    pub source: VertexTag,
    pub target: VertexTag,
    /// Canonicalized formal sum of parallel paths.
    pub terms: PathSum,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.label)?;
        for (idx, (coeff, word)) in self.terms.iter().enumerate() {
            let abs = coeff.abs();
            if idx == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs == rat(1) {
                write!(f, "{word}")?;
            } else {
                write!(f, "{abs}*{word}")?;
            }
        }
        write!(f, " = 0")
    }
}

/// Merges like words, drops zero coefficients, sorts words by length then
/// lexicographically, and flips signs so the leading coefficient is
/// positive.
pub fn canonicalize(terms: PathSum) -> PathSum {
    let mut merged: BTreeMap<PathWord, Rational> = BTreeMap::new();
    for (coeff, word) in terms {
        let entry = merged.entry(word).or_insert_with(Rational::zero);
        *entry += coeff;
    }
    let mut out: Vec<(Rational, PathWord)> = merged
        .into_iter()
        .filter(|(_, coeff)| !coeff.is_zero())
        .map(|(word, coeff)| (coeff, word))
        .collect();
    out.sort_by(|a, b| {
        (a.1.arrows.len(), &a.1.arrows).cmp(&(b.1.arrows.len(), &b.1.arrows))
    });
    if out.first().is_some_and(|(coeff, _)| coeff.is_negative()) {
        for (coeff, _) in &mut out {
            *coeff = -coeff.clone();
        }
    }
    out
}

struct Generator<'q> {
    quiver: &'q Quiver,
    paths: CompositePaths,
    out: Vec<Relation>,
}

fn chain(t: usize) -> VertexTag {
    VertexTag::Chain(t)
}

impl<'q> Generator<'q> {
    /// Single-word sum along named arrows; the start vertex is read off the
    /// first arrow.
    fn word(&self, arrows: &[&str]) -> PathSum {
        let start = self
            .quiver
            .arrow(arrows[0])
            .expect("relation words use arrows of the quiver")
            .source;
        let word =
            path(self.quiver, start, arrows).expect("relation words are composable");
        vec![(rat(1), word)]
    }

    /// The alias `k_r` as a one-word sum.
    fn k(&self, r: usize) -> PathSum {
        self.word(&[self.quiver.k_alias(r)])
    }

    fn push(&mut self, label: impl Into<String>, lhs: &PathSum, rhs: &PathSum) {
        let mut terms = lhs.clone();
        terms.extend(scale(rhs, &rat(-1)));
        let terms = canonicalize(terms);
        let (source, target) = {
            let first = &terms.first().expect("relations do not cancel entirely").1;
            (first.source, first.target)
        };
        for (_, word) in &terms {
            assert_eq!((word.source, word.target), (source, target));
        }
        self.out.push(Relation {
            label: label.into(),
            source,
            target,
            terms,
        });
    }

    fn push_zero(&mut self, label: impl Into<String>, arrows: &[&str]) {
        let sum = self.word(arrows);
        self.push(label, &sum, &Vec::new());
    }

    /// The vanishing 2-cycles at the horns and around the star, then the
    /// mesh relations along the doubled chain. `split` is the vertex the
    /// star hangs off.
    fn preprojective(&mut self, split: usize) {
        self.push_zero("zero_plus", &["g_{+,1}", "f_{1,+}"]);
        self.push_zero("zero_minus", &["g_{-,1}", "f_{1,-}"]);
        let s = chain(split);
        let up = chain(split + 1);
        self.push_zero("zero_star", &[&format!("f_{{0,{split}}}"), &format!("g_{{{s},0}}")]);
        self.push_zero(
            "zero_top",
            &[&format!("f_{{{up},{s}}}"), &format!("g_{{{s},{up}}}")],
        );
        if split == 1 {
            // With the star directly on vertex 1 the horn and star meshes
            // merge into one.
            let lhs = {
                let mut t = self.word(&["g_{1,0}", "f_{0,1}"]);
                t.extend(scale(&self.word(&["g_{1,2}", "f_{2,1}"]), &rat(-1)));
                t
            };
            let rhs = {
                let mut t = self.word(&["f_{1,+}", "g_{+,1}"]);
                t.extend(scale(&self.word(&["f_{1,-}", "g_{-,1}"]), &rat(-1)));
                t
            };
            self.push("mesh_1", &lhs, &rhs);
            return;
        }
        let lhs = {
            let mut t = self.word(&["f_{1,+}", "g_{+,1}"]);
            t.extend(scale(&self.word(&["f_{1,-}", "g_{-,1}"]), &rat(-1)));
            t
        };
        let rhs = scale(&self.word(&["f_{1,2}", "g_{2,1}"]), &rat(2));
        self.push("mesh_1", &lhs, &rhs);
        for t in 2..split {
            let lhs = self.word(&[&format!("g_{{{t},{}}}", t - 1), &format!("f_{{{},{t}}}", t - 1)]);
            let rhs = self.word(&[&format!("f_{{{t},{}}}", t + 1), &format!("g_{{{},{t}}}", t + 1)]);
            self.push(format!("mesh_{t}"), &lhs, &rhs);
        }
        let lhs = {
            let mut t = self.word(&[&format!("g_{{{s},0}}"), &format!("f_{{0,{s}}}")]);
            t.extend(scale(
                &self.word(&[&format!("g_{{{s},{up}}}"), &format!("f_{{{up},{s}}}")]),
                &rat(-1),
            ));
            t
        };
        let below = chain(split - 1);
        let rhs = scale(
            &self.word(&[&format!("g_{{{s},{below}}}"), &format!("f_{{{below},{s}}}")]),
            &rat(2),
        );
        self.push(format!("mesh_{split}"), &lhs, &rhs);
    }

    /// The block of relations at tail vertex `i` in the generic case.
    fn tail_step(&mut self, i: usize) {
        let n_len = self.quiver.chain_len();
        let nu = self.quiver.params.nu;
        let tables = self.quiver.tables();

        // The passage arriving at `i` from the left: through the doubled
        // chain at the split vertex, along the tail otherwise.
        let left = if i == nu + 1 {
            self.paths.pr[&chain(i)].clone()
        } else {
            self.word(&[&format!("a_{{{i},{}}}", i - 1), &format!("c_{{{},{i}}}", i - 1)])
        };
        let right = |gen: &Self| {
            gen.word(&[&format!("c_{{{i},{}}}", i + 1), &format!("a_{{{},{i}}}", i + 1)])
        };

        let Some(v) = tables.first_k_at(i) else {
            // No extra arrow leaves `i`: the two passages around it agree.
            let rhs = right(self);
            self.push(format!("step_{i}"), &rhs, &left);
            return;
        };
        let u = tables.last_k_at(i).expect("first and last exist together");
        let an_i = self.paths.an[&i].clone();
        let clr_i = self.paths.clr[&i].clone();

        let lhs = mul(&self.k(v), &an_i);
        self.push(format!("step_{i}_left"), &lhs, &left);

        let back_vertex = tables.left_vertex_with_k(i);
        let back_alias = tables.last_k_left_of(i);
        let lhs = mul(&an_i, &self.k(v));
        let rhs = mul(&self.paths.clr[&back_vertex].clone(), &self.k(back_alias));
        self.push(format!("step_{i}_star"), &lhs, &rhs);

        for t in v..u {
            let lhs = mul(&self.k(t), &clr_i);
            let rhs = mul(&self.k(t + 1), &an_i);
            self.push(format!("step_{i}_pair_{t}_left"), &lhs, &rhs);
            let lhs = mul(&clr_i, &self.k(t));
            let rhs = mul(&an_i, &self.k(t + 1));
            self.push(format!("step_{i}_pair_{t}_star"), &lhs, &rhs);
        }

        if i < n_len {
            let lhs = mul(&self.k(u), &clr_i);
            let rhs = right(self);
            self.push(format!("step_{i}_right"), &lhs, &rhs);
        }
    }

    fn generic_case(&mut self) {
        let nu = self.quiver.params.nu;
        let n_len = self.quiver.chain_len();
        let up = chain(nu + 1);
        let s = chain(nu);

        let lhs = self.word(&[&format!("f_{{0,{s}}}"), &format!("g_{{{s},{up}}}")]);
        let rhs = scale(&self.paths.an[&(nu + 1)].clone(), &rat(2));
        self.push("start", &lhs, &rhs);

        self.preprojective(nu);
        for i in nu + 1..=n_len {
            self.tail_step(i);
        }
    }

    fn boundary_case(&mut self) {
        let n_len = self.quiver.chain_len();
        self.preprojective(n_len - 1);

        let extras = self
            .quiver
            .arrows()
            .iter()
            .filter(|a| matches!(a.kind, crate::quiver::ArrowKind::K(_)))
            .count();
        if extras == 0 {
            return;
        }
        let an_n = self.paths.an[&n_len].clone();
        let clr_n = self.paths.clr[&n_len].clone();

        let lhs = mul(&self.k(1), &an_n);
        self.push("extra_left", &lhs, &self.paths.pr[&chain(n_len)].clone());
        let lhs = mul(&an_n, &self.k(1));
        self.push("extra_star", &lhs, &self.paths.pr[&VertexTag::Star].clone());
        for t in 1..extras {
            let lhs = mul(&self.k(t), &clr_n);
            let rhs = mul(&self.k(t + 1), &an_n);
            self.push(format!("extra_pair_{t}_left"), &lhs, &rhs);
            let lhs = mul(&an_n, &self.k(t + 1));
            let rhs = mul(&clr_n, &self.k(t));
            self.push(format!("extra_pair_{t}_star"), &lhs, &rhs);
        }
    }
}

/// Generates the defining relations in the chosen presentation, in the
/// documented block order.
pub fn relations(quiver: &Quiver, presentation: Presentation) -> Result<Vec<Relation>> {
    if quiver.params.case == CaseTag::OutOfScope {
        return Err(crate::error::Error::OutOfScope {
            n: quiver.params.n,
            q: quiver.params.q,
        });
    }
    let paths = crate::quiver::composite_paths(quiver, presentation);
    let mut gen = Generator {
        quiver,
        paths,
        out: Vec::new(),
    };
    match quiver.params.case {
        CaseTag::A => gen.generic_case(),
        _ => gen.boundary_case(),
    }
    let labels: std::collections::BTreeSet<&str> =
        gen.out.iter().map(|r| r.label.as_str()).collect();
    assert_eq!(labels.len(), gen.out.len(), "relation labels are unique");
    Ok(gen.out)
}
