use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::Rat;

/// Directed multigraph with named vertices and arrows.
///
/// Vertex and arrow names share one namespace: fixture files and pretty
/// printers refer to lazy paths as `e<vertex>` and to composite paths by
/// joining arrow names with `*`, so ambiguity is rejected up front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut names: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
        names.extend(arrows.iter().map(|a| a.name.as_str()));
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::Presentation(
                "vertex and arrow names must be distinct".into(),
            ));
        }
        for a in &arrows {
            if a.src >= vertices.len() || a.tgt >= vertices.len() {
                return Err(Error::Presentation(format!(
                    "arrow {} references an undeclared vertex",
                    a.name
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same names, all arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    src: a.tgt,
                    tgt: a.src,
                })
                .collect(),
        }
    }

    /// All paths of length exactly `len`, extending shorter paths in arrow
    /// order; deterministic enumeration.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        if len == 0 {
            return (0..self.vertices.len()).map(Path::lazy).collect();
        }
        let mut out = Vec::new();
        for shorter in self.paths_of_length(len - 1) {
            let end = shorter.tgt(self);
            for (i, a) in self.arrows.iter().enumerate() {
                if a.src == end {
                    let mut arrows = shorter.arrows.clone();
                    arrows.push(i);
                    out.push(Path {
                        src: shorter.src,
                        arrows,
                    });
                }
            }
        }
        out
    }
}

/// A path in a quiver; empty arrow list means the lazy path at `src`.
/// Composition is read left to right: `arrows[0]` is traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(v: usize) -> Self {
        Path {
            src: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(Error::Presentation("empty arrow path needs a vertex".into()));
        }
        for w in arrows.windows(2) {
            if q.arrow(w[0]).tgt != q.arrow(w[1]).src {
                return Err(Error::Presentation(format!(
                    "arrows {} and {} do not compose",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        Ok(Path {
            src: q.arrow(arrows[0]).src,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn tgt(&self, q: &Quiver) -> usize {
        self.arrows
            .last()
            .map(|&a| q.arrow(a).tgt)
            .unwrap_or(self.src)
    }

    /// Concatenation `self` then `other`; None when endpoints do not match.
    pub fn compose(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.tgt(q) != other.src {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            src: self.src,
            arrows,
        })
    }

    pub fn reversed(&self, q: &Quiver) -> Path {
        let mut arrows: Vec<usize> = self.arrows.iter().rev().copied().collect();
        let src = self.tgt(q);
        arrows.shrink_to_fit();
        Path { src, arrows }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_lazy() {
            format!("e{}", q.vertex_name(self.src))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// Formal rational combination of parallel paths.
#[derive(Clone, Debug, PartialEq)]
pub struct PathComb {
    pub terms: Vec<(Rat, Path)>,
}

impl PathComb {
    pub fn new(terms: Vec<(Rat, Path)>) -> Self {
        PathComb {
            terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect(),
        }
    }

    pub fn single(path: Path) -> Self {
        PathComb {
            terms: vec![(Rat::from_integer(1.into()), path)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Source/target shared by all terms; error when terms are not parallel.
    pub fn endpoints(&self, q: &Quiver) -> Result<(usize, usize)> {
        let Some((_, first)) = self.terms.first() else {
            return Err(Error::Presentation("empty path combination".into()));
        };
        let st = (first.src, first.tgt(q));
        for (_, p) in &self.terms {
            if (p.src, p.tgt(q)) != st {
                return Err(Error::Presentation(
                    "combination of non-parallel paths".into(),
                ));
            }
        }
        Ok(st)
    }

    pub fn reversed(&self, q: &Quiver) -> PathComb {
        PathComb {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed(q)))
                .collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format!("{}*{}", c, p.display(q)));
        }
        out
    }
}

/// A quiver together with relations: the input to algebra assembly.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<PathComb>,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: Vec<PathComb>) -> Result<Self> {
        for rel in &relations {
            rel.endpoints(&quiver)?;
            if rel.terms.iter().any(|(_, p)| p.len() < 2) {
                return Err(Error::Presentation(
                    "every path in a relation must have length at least 2".into(),
                ));
            }
        }
        Ok(AlgebraPresentation { quiver, relations })
    }

    pub fn opposite(&self) -> AlgebraPresentation {
        let q = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| r.reversed(&self.quiver))
            .collect();
        AlgebraPresentation {
            quiver: q,
            relations,
        }
    }
}
