//! Acyclic quivers, their path algebras and the standard modules over them.

use serde::{Deserialize, Serialize};

use crate::algcore::io::json_error;
use crate::algcore::linalg::{unit_vec, Matrix, Subspace};
use crate::algcore::io::parse_field;
use crate::algcore::{GradedAlgebra, GradedModule};
use crate::error::{Error, Result};
use crate::exactmath::{Field, FinAbGroup};

/// On-disk form of a path algebra. Arrow endpoints are vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub field: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    /// Grade by path length mod 2.
    #[serde(default)]
    pub parity: bool,
}

pub fn parse_quiver(text: &str, source: &str) -> Result<PathAlgebra> {
    let file: QuiverFile = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    let quiver = Quiver::new(file.vertices, file.arrows)?;
    PathAlgebra::new(&quiver, parse_field(&file.field)?, file.parity)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let n = vertices.len();
        for a in &arrows {
            if a.source >= n || a.target >= n {
                return Err(Error::NoSuchVertex(format!(
                    "arrow {} joins {} and {}, quiver has {n} vertices",
                    a.name, a.source, a.target
                )));
            }
        }
        let q = Quiver { vertices, arrows };
        if q.topological_order().is_none() {
            return Err(Error::CyclicQuiver("the quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    /// `1 -> 2 -> ... -> n` with arrows named `a, b, c, ...`.
    pub fn linear(n: usize) -> Quiver {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (0..n.saturating_sub(1))
            .map(|i| Arrow {
                source: i,
                target: i + 1,
                name: ((b'a' + (i % 26) as u8) as char).to_string(),
            })
            .collect();
        Quiver::new(vertices, arrows).expect("linear quivers are acyclic")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Is the underlying graph a line (Dynkin type A, any orientation)?
    pub fn is_type_a(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 || self.arrows.len() != n - 1 {
            return false;
        }
        let mut deg = vec![0usize; n];
        for a in &self.arrows {
            if a.source == a.target {
                return false;
            }
            deg[a.source] += 1;
            deg[a.target] += 1;
        }
        deg.iter().all(|&d| d <= 2) && self.is_connected(&(0..n).collect::<Vec<_>>())
    }

    /// Is the full subquiver on `support` connected as an undirected graph?
    pub fn is_connected(&self, support: &[usize]) -> bool {
        let Some(&start) = support.first() else {
            return false;
        };
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                let other = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if support.contains(&other) && !seen.contains(&other) {
                    seen.push(other);
                    stack.push(other);
                }
            }
        }
        seen.len() == support.len()
    }
}

/// A path, recorded by the arrows it traverses in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// `kQ` with basis the paths of `Q`, ordered by length and then by
/// extension order. The product `p q` is `p` after `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct PathAlgebra {
    quiver: Quiver,
    paths: Vec<Path>,
    algebra: GradedAlgebra,
}

impl PathAlgebra {
    /// With `parity` the algebra is `Z_2`-graded by path length mod 2;
    /// otherwise it is trivially graded.
    pub fn new(quiver: &Quiver, field: Field, parity: bool) -> Result<PathAlgebra> {
        let paths = enumerate_paths(quiver);
        let names: Vec<String> = paths.iter().map(|p| path_name(quiver, p)).collect();
        let index = |arrows: &[usize], s: usize, t: usize| {
            paths
                .iter()
                .position(|p| p.arrows == arrows && p.source == s && p.target == t)
                .expect("path is enumerated")
        };
        let mut mult = Vec::new();
        for (i, p) in paths.iter().enumerate() {
            for (j, q) in paths.iter().enumerate() {
                if p.source != q.target {
                    continue;
                }
                let mut arrows = q.arrows.clone();
                arrows.extend_from_slice(&p.arrows);
                mult.push((i, j, index(&arrows, q.source, p.target), field.one()));
            }
        }
        let (group, degrees) = if parity {
            (FinAbGroup::cyclic(2)?, paths.iter().map(|p| p.len() % 2).collect())
        } else {
            (FinAbGroup::trivial(), vec![0; paths.len()])
        };
        let mut unit = vec![field.zero(); paths.len()];
        for (i, p) in paths.iter().enumerate() {
            if p.is_trivial() {
                unit[i] = field.one();
            }
        }
        let algebra = GradedAlgebra::new(field, group, names, degrees, mult, Some(unit))?;
        Ok(PathAlgebra {
            quiver: quiver.clone(),
            paths,
            algebra,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// Basis index of the trivial path at `i`.
    pub fn idempotent(&self, i: usize) -> usize {
        self.paths
            .iter()
            .position(|p| p.is_trivial() && p.source == i)
            .expect("every vertex has a trivial path")
    }

    pub fn arrow_index(&self, arrow: usize) -> usize {
        self.paths
            .iter()
            .position(|p| p.arrows == [arrow])
            .expect("every arrow is a path")
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i >= self.num_vertices() {
            return Err(Error::NoSuchVertex(format!(
                "vertex {i} (0-based) in a quiver with {} vertices",
                self.num_vertices()
            )));
        }
        Ok(())
    }

    /// Basis indices of paths starting at `i`.
    pub fn paths_from(&self, i: usize) -> Vec<usize> {
        (0..self.paths.len()).filter(|&k| self.paths[k].source == i).collect()
    }

    /// Basis indices of paths ending at `i`.
    pub fn paths_to(&self, i: usize) -> Vec<usize> {
        (0..self.paths.len()).filter(|&k| self.paths[k].target == i).collect()
    }

    /// `P_i = A e_i`, basis the paths starting at `i` (so `e_i` comes first).
    pub fn projective(&self, i: usize) -> Result<GradedModule> {
        self.check_vertex(i)?;
        let d = self.algebra.dim();
        let field = self.algebra.field();
        let basis: Vec<_> = self.paths_from(i).into_iter().map(|k| unit_vec(field, d, k)).collect();
        Ok(GradedModule::regular(&self.algebra).submodule(&basis)?.0)
    }

    /// `e_i A` as a left module over the opposite algebra.
    pub fn right_projective(&self, i: usize) -> Result<GradedModule> {
        self.check_vertex(i)?;
        let d = self.algebra.dim();
        let field = self.algebra.field();
        let basis: Vec<_> = self.paths_to(i).into_iter().map(|k| unit_vec(field, d, k)).collect();
        Ok(GradedModule::regular(&self.algebra.opposite()).submodule(&basis)?.0)
    }

    /// `I_i = D(e_i A)`: the left action on the dual is the transpose of the
    /// right action.
    pub fn injective(&self, i: usize) -> Result<GradedModule> {
        let right = self.right_projective(i)?;
        let group = self.algebra.group();
        let degrees = right.degrees().iter().map(|&g| group.neg_idx(g)).collect();
        let action = right.actions().iter().map(Matrix::transpose).collect();
        GradedModule::new(&self.algebra, degrees, action)
    }

    pub fn simple(&self, i: usize) -> Result<GradedModule> {
        self.thin_module(&[i])
    }

    /// The representation with `k` at each vertex of `support`, identity
    /// maps along arrows inside the support and zero elsewhere. Basis vectors
    /// follow the order of `support`.
    pub fn thin_module(&self, support: &[usize]) -> Result<GradedModule> {
        for &v in support {
            self.check_vertex(v)?;
        }
        if !self.quiver.is_connected(support) {
            return Err(Error::InvalidModule(format!("support {support:?} is not connected")));
        }
        let field = self.algebra.field();
        let m = support.len();
        let pos = |v: usize| support.iter().position(|&w| w == v);
        let action = self
            .paths
            .iter()
            .map(|p| {
                let mut mat = Matrix::zeros(field, m, m);
                let mut visited = vec![p.source];
                visited.extend(p.arrows.iter().map(|&a| self.quiver.arrows[a].target));
                if visited.iter().all(|&v| pos(v).is_some()) {
                    mat.set(pos(p.target).unwrap(), pos(p.source).unwrap(), field.one());
                }
                mat
            })
            .collect();
        let degrees = self.support_degrees(support);
        GradedModule::new(&self.algebra, degrees, action)
    }

    /// Parity of each support vertex relative to the first one, so that
    /// arrows shift degree by one when the algebra is parity graded.
    fn support_degrees(&self, support: &[usize]) -> Vec<usize> {
        if self.algebra.group().order() == 1 {
            return vec![0; support.len()];
        }
        let mut deg: Vec<Option<usize>> = vec![None; support.len()];
        deg[0] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for a in &self.quiver.arrows {
                let (Some(s), Some(t)) = (
                    support.iter().position(|&w| w == a.source),
                    support.iter().position(|&w| w == a.target),
                ) else {
                    continue;
                };
                match (deg[s], deg[t]) {
                    (Some(x), None) => {
                        deg[t] = Some((x + 1) % 2);
                        changed = true;
                    }
                    (None, Some(y)) => {
                        deg[s] = Some((y + 1) % 2);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        deg.into_iter().map(|d| d.unwrap_or(0)).collect()
    }

    /// Every connected support, in lexicographic order of sorted vertex
    /// lists. For type A these are exactly the indecomposable modules.
    pub fn indecomposables(&self) -> Result<Vec<(Vec<usize>, GradedModule)>> {
        if !self.quiver.is_type_a() {
            return Err(Error::InvalidModule(
                "indecomposables are only enumerated for quivers of type A".into(),
            ));
        }
        let n = self.num_vertices();
        let mut supports: Vec<Vec<usize>> = (1u32..(1 << n))
            .map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect::<Vec<_>>())
            .filter(|s| self.quiver.is_connected(s))
            .collect();
        supports.sort();
        supports
            .into_iter()
            .map(|s| {
                let m = self.thin_module(&s)?;
                Ok((s, m))
            })
            .collect()
    }

    /// `dim e_i M` for each vertex.
    pub fn dimension_vector(&self, m: &GradedModule) -> Vec<i64> {
        (0..self.num_vertices())
            .map(|i| m.action(self.idempotent(i)).rank() as i64)
            .collect()
    }

    /// Radical `sum_arrows a M` as a subspace of `M`.
    pub fn radical(&self, m: &GradedModule) -> Subspace {
        let field = self.algebra.field();
        let mut vs = Vec::new();
        for a in 0..self.quiver.arrows.len() {
            vs.extend(m.action(self.arrow_index(a)).columns());
        }
        Subspace::from_vectors(field, m.dim(), &vs)
    }
}

fn enumerate_paths(q: &Quiver) -> Vec<Path> {
    let mut all: Vec<Path> = (0..q.num_vertices())
        .map(|v| Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect();
    let mut frontier: Vec<Path> = all.clone();
    loop {
        let mut next = Vec::new();
        for p in &frontier {
            for (k, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(k);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        if next.is_empty() {
            return all;
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
}

/// `e<vertex>` for trivial paths, otherwise arrow names right to left.
fn path_name(q: &Quiver, p: &Path) -> String {
    if p.is_trivial() {
        return format!("e{}", q.vertices[p.source]);
    }
    p.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect()
}
