//! Digraphs associated with a reflection representation: vertex `i` points
//! to vertex `j` exactly when the generator `s_j` moves the reflection
//! vector `alpha_i`. Includes connectivity queries, the move calculus on
//! equal-size vertex subsets, and the greedy construction of a weakly
//! connected subset whose reflection vectors form a basis.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::matrix::EchelonBasis;
use crate::reflection::{ReflectionError, ReflectionRep};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum DigraphError {
    #[error("arrow {0} -> {0} would be a loop")]
    Loop(usize),
    #[error("vertex {0} is not in the vertex set")]
    UnknownVertex(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("subsets must have equal cardinality, got {0} and {1}")]
    CardinalityMismatch(usize, usize),
    #[error("digraph is not weakly connected")]
    NotWeaklyConnected,
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("move search exhausted without reaching the target")]
    SearchExhausted,
    #[error(
        "representation is not irreducible: the returned vectors span a proper nonzero invariant subspace"
    )]
    NotIrreducibleEvidence { invariant_subspace: Vec<Vec<Scalar>> },
    #[error("simplicity could not be decided: {0}")]
    SimplicityUnresolved(String),
    #[error(transparent)]
    Reflection(#[from] ReflectionError),
}

/// A finite digraph without loops or multiple arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: BTreeSet<usize>,
    arrows: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(
        vertices: BTreeSet<usize>,
        arrows: BTreeSet<(usize, usize)>,
    ) -> Result<Self, DigraphError> {
        for &(i, j) in &arrows {
            if i == j {
                return Err(DigraphError::Loop(i));
            }
            for v in [i, j] {
                if !vertices.contains(&v) {
                    return Err(DigraphError::UnknownVertex(v));
                }
            }
        }
        Ok(Digraph { vertices, arrows })
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    pub fn has_arrow(&self, i: usize, j: usize) -> bool {
        self.arrows.contains(&(i, j))
    }

    /// Sub-digraph spanned by a vertex subset.
    pub fn spanned(&self, subset: &BTreeSet<usize>) -> Result<Digraph, DigraphError> {
        for v in subset {
            if !self.vertices.contains(v) {
                return Err(DigraphError::UnknownVertex(*v));
            }
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|(i, j)| subset.contains(i) && subset.contains(j))
            .copied()
            .collect();
        Ok(Digraph { vertices: subset.clone(), arrows })
    }

    /// Neighbours in the undirected shadow, in ascending order.
    pub fn undirected_neighbors(&self, v: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &(i, j) in &self.arrows {
            if i == v {
                out.insert(j);
            }
            if j == v {
                out.insert(i);
            }
        }
        out
    }

    pub fn is_weakly_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.undirected_neighbors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn is_strongly_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let reach = |forward: bool| -> BTreeSet<usize> {
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(i, j) in &self.arrows {
                    let (from, to) = if forward { (i, j) } else { (j, i) };
                    if from == v && seen.insert(to) {
                        queue.push_back(to);
                    }
                }
            }
            seen
        };
        reach(true).len() == self.vertices.len() && reach(false).len() == self.vertices.len()
    }

    /// DOT text with default labels `v<i>`.
    pub fn to_dot(&self) -> String {
        self.to_dot_with(|i| format!("v{i}"))
    }

    /// DOT text with caller-supplied vertex labels; ordering is stable.
    pub fn to_dot_with(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::from("digraph {\n");
        for &v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", label(v)));
        }
        for &(i, j) in &self.arrows {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", label(i), label(j)));
        }
        out.push('}');
        out
    }
}

/// The digraph on the given generator indices, with an arrow `i -> j`
/// whenever `s_j` moves `alpha_i`. Spanned subsets of a larger index set
/// give the same digraph as building directly on the subset.
pub fn associated_digraph(
    rep: &ReflectionRep,
    indices: &BTreeSet<usize>,
) -> Result<Digraph, DigraphError> {
    if indices.is_empty() {
        return Err(DigraphError::EmptyVertexSet);
    }
    for &i in indices {
        rep.check_index(i)?;
    }
    let mut arrows = BTreeSet::new();
    for &i in indices {
        for &j in indices {
            if i != j && !rep.interaction_coefficient(i, j)?.is_zero() {
                arrows.insert((i, j));
            }
        }
    }
    Ok(Digraph { vertices: indices.clone(), arrows })
}

/// One step of the move calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    /// Replace the arrow's tail by its head.
    Forward,
    /// Replace the arrow's head by its tail.
    Back,
}

/// A single move between equal-size vertex subsets, along one arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub from: BTreeSet<usize>,
    pub arrow: (usize, usize),
    pub to: BTreeSet<usize>,
    pub kind: MoveKind,
}

impl Move {
    /// Re-check the defining conditions against a digraph.
    pub fn is_valid(&self, g: &Digraph) -> bool {
        if !g.has_arrow(self.arrow.0, self.arrow.1) || self.from.len() != self.to.len() {
            return false;
        }
        let (i, j) = self.arrow;
        let (tail_side, head_side) = match self.kind {
            MoveKind::Forward => (&self.from, &self.to),
            MoveKind::Back => (&self.to, &self.from),
        };
        let mut tail_minus = tail_side.clone();
        let mut head_minus = head_side.clone();
        tail_side.contains(&i)
            && head_side.contains(&j)
            && tail_minus.remove(&i)
            && head_minus.remove(&j)
            && tail_minus == head_minus
    }
}

/// Move the tail of `arrow` to its head inside `subset`.
pub fn apply_move(
    g: &Digraph,
    subset: &BTreeSet<usize>,
    arrow: (usize, usize),
) -> Result<BTreeSet<usize>, DigraphError> {
    let (i, j) = arrow;
    if !g.has_arrow(i, j) {
        return Err(DigraphError::InvalidMove(format!("no arrow {i} -> {j}")));
    }
    if !subset.contains(&i) {
        return Err(DigraphError::InvalidMove(format!("tail {i} not in subset")));
    }
    if subset.contains(&j) {
        return Err(DigraphError::InvalidMove(format!(
            "head {j} already in subset; the moved subset must keep its cardinality"
        )));
    }
    let mut out = subset.clone();
    out.remove(&i);
    out.insert(j);
    Ok(out)
}

/// A shortest sequence of moves (forward or back) transforming `from` into
/// `to`, found by breadth-first search over equal-size subsets. Exists for
/// any two equal-size subsets of a weakly connected digraph.
pub fn move_sequence(
    g: &Digraph,
    from: &BTreeSet<usize>,
    to: &BTreeSet<usize>,
) -> Result<Vec<Move>, DigraphError> {
    if from.len() != to.len() {
        return Err(DigraphError::CardinalityMismatch(from.len(), to.len()));
    }
    for v in from.iter().chain(to.iter()) {
        if !g.vertices().contains(v) {
            return Err(DigraphError::UnknownVertex(*v));
        }
    }
    if !g.is_weakly_connected() {
        return Err(DigraphError::NotWeaklyConnected);
    }
    if from == to {
        return Ok(Vec::new());
    }

    let mut parents: BTreeMap<BTreeSet<usize>, Move> = BTreeMap::new();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::from([from.clone()]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(state) = queue.pop_front() {
        for &(i, j) in g.arrows() {
            let steps = [
                (MoveKind::Forward, i, j),
                (MoveKind::Back, j, i),
            ];
            for (kind, leave, enter) in steps {
                if !state.contains(&leave) || state.contains(&enter) {
                    continue;
                }
                let mut next = state.clone();
                next.remove(&leave);
                next.insert(enter);
                if !seen.insert(next.clone()) {
                    continue;
                }
                parents.insert(
                    next.clone(),
                    Move { from: state.clone(), arrow: (i, j), to: next.clone(), kind },
                );
                if &next == to {
                    let mut path = Vec::new();
                    let mut cur = next;
                    while &cur != from {
                        let step = parents[&cur].clone();
                        cur = step.from.clone();
                        path.push(step);
                    }
                    path.reverse();
                    return Ok(path);
                }
                queue.push_back(next);
            }
        }
    }
    Err(DigraphError::SearchExhausted)
}

/// Replay a move sequence from `start`; every step is re-validated.
pub fn replay_moves(
    g: &Digraph,
    start: &BTreeSet<usize>,
    moves: &[Move],
) -> Result<BTreeSet<usize>, DigraphError> {
    let mut cur = start.clone();
    for mv in moves {
        if mv.from != cur {
            return Err(DigraphError::InvalidMove(format!(
                "step starts at {:?} but state is {:?}",
                mv.from, cur
            )));
        }
        if !mv.is_valid(g) {
            return Err(DigraphError::InvalidMove(format!("invalid step {mv:?}")));
        }
        cur = mv.to.clone();
    }
    Ok(cur)
}

/// Grow a weakly connected index subset whose reflection vectors form a
/// basis. The representation is first certified simple; on a reducible
/// input the certificate's invariant subspace is returned as evidence.
/// Growth is deterministic: starting from the lowest index, the first pair
/// `(j in subset, i0 in [k])` in lexicographic order with
/// `s_i0 * alpha_j` outside the current span adjoins `i0`.
pub fn connected_basis_subset(rep: &ReflectionRep) -> Result<BTreeSet<usize>, DigraphError> {
    match crate::modtheory::is_simple_reflection(rep) {
        Ok(cert) => {
            if let crate::modtheory::SimplicityCertificate::NotSimple {
                invariant_subspace, ..
            } = cert
            {
                return Err(DigraphError::NotIrreducibleEvidence { invariant_subspace });
            }
        }
        Err(e) => return Err(DigraphError::SimplicityUnresolved(e.to_string())),
    }

    let n = rep.dim();
    let k = rep.k();
    let start = (0..k)
        .find(|&i| !crate::matrix::vec_is_zero(rep.generator(i).alpha()))
        .expect("validated reflections have nonzero vectors");
    let mut subset = BTreeSet::from([start]);
    let mut span = EchelonBasis::new(n);
    span.insert(rep.generator(start).alpha().to_vec());

    while subset.len() < n {
        let mut grown = false;
        'scan: for &j in &subset {
            for i0 in 0..k {
                let moved = rep.generator(i0).matrix().mul_vec(rep.generator(j).alpha());
                if !span.contains(&moved) {
                    // s_i0 sends alpha_j to alpha_j + x alpha_i0 with x != 0
                    // and alpha_i0 outside the span, so adjoining i0 keeps
                    // the vectors independent and adds the arrow j -> i0.
                    span.insert(rep.generator(i0).alpha().to_vec());
                    subset.insert(i0);
                    grown = true;
                    break 'scan;
                }
            }
        }
        if !grown {
            // Every generator maps every chosen vector into the span, so
            // the span is a proper nonzero invariant subspace. Unreachable
            // after certification; kept as an honest exit.
            return Err(DigraphError::NotIrreducibleEvidence {
                invariant_subspace: span.basis().to_vec(),
            });
        }
    }

    debug_assert!(associated_digraph(rep, &subset)
        .map(|g| g.is_weakly_connected())
        .unwrap_or(false));
    Ok(subset)
}
