//! Recognition of induced paths of length three and induced squares on four
//! vertices, shared by the RAAG criterion and the witness search.

/// Shape of an induced 4-vertex subgraph that obstructs LERF for a RAAG.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadShape {
    /// Path of length three.
    Path,
    /// Square (4-cycle).
    Cycle,
}

/// Classifies the subgraph induced on `quad` (positions in increasing order)
/// under `adjacent`. The returned order walks the path from its smaller
/// endpoint, or the cycle from its least vertex towards its smaller neighbour.
pub fn classify_quad<F>(adjacent: F, quad: [usize; 4]) -> Option<(QuadShape, [usize; 4])>
where
    F: Fn(usize, usize) -> bool,
{
    let mut degree = [0usize; 4];
    let mut edges = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if adjacent(quad[a], quad[b]) {
                degree[a] += 1;
                degree[b] += 1;
                edges += 1;
            }
        }
    }
    let (shape, start) = match edges {
        3 if degree.iter().all(|&d| d == 1 || d == 2) => {
            (QuadShape::Path, degree.iter().position(|&d| d == 1)?)
        }
        4 if degree.iter().all(|&d| d == 2) => (QuadShape::Cycle, 0),
        _ => return None,
    };
    let mut order = [start; 4];
    let mut used = [false; 4];
    used[start] = true;
    for step in 1..4 {
        let prev = order[step - 1];
        let next = (0..4).find(|&b| !used[b] && adjacent(quad[prev], quad[b]))?;
        used[next] = true;
        order[step] = next;
    }
    Some((shape, order.map(|k| quad[k])))
}

/// All 4-element subsets of `0..n` in lexicographic order.
pub fn quadruples(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n)
            .flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

/// All 3-element subsets of `0..n` in lexicographic order.
pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}
