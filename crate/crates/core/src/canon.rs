//! Canonical labeling for small graphs: equitable partition refinement with
//! individualization, keeping the lexicographically largest relabeled
//! adjacency matrix over all leaves of the search tree.

use crate::graph::{bits, Graph};

type Cells = Vec<Vec<usize>>;

fn as_bitset(cell: &[usize], words: usize) -> Vec<u64> {
    let mut set = vec![0u64; words];
    for &v in cell {
        set[v / 64] |= 1 << (v % 64);
    }
    set
}

fn count_into(g: &Graph, v: usize, set: &[u64]) -> usize {
    g.row(v)
        .iter()
        .zip(set)
        .map(|(a, b)| (a & b).count_ones() as usize)
        .sum()
}

/// Refines `cells` until every cell is equitable with respect to every
/// other. Split order depends only on neighbor counts, so the result is
/// isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Cells) {
    let words = g.words();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = as_bitset(&cells[s], words);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (count_into(g, v, &splitter), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    changed = true;
                }
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let words = g.words();
    (0..words).all(|w| {
        let mut a = g.row(u)[w];
        let mut b = g.row(v)[w];
        if v / 64 == w {
            a &= !(1 << (v % 64));
        }
        if u / 64 == w {
            b &= !(1 << (u % 64));
        }
        a == b
    })
}

struct Best {
    code: Vec<u64>,
    perm: Vec<usize>,
}

fn leaf(g: &Graph, cells: &Cells, best: &mut Option<Best>) {
    let n = g.n();
    let words = g.words();
    let mut perm = vec![0; n];
    for (i, cell) in cells.iter().enumerate() {
        perm[cell[0]] = i;
    }
    let mut code = vec![0u64; n * words];
    for (i, cell) in cells.iter().enumerate() {
        for u in bits(g.row(cell[0])) {
            let j = perm[u];
            // most significant bit first so lexicographic order is natural
            code[i * words + j / 64] |= 1 << (63 - j % 64);
        }
    }
    if best.as_ref().is_none_or(|b| code > b.code) {
        *best = Some(Best { code, perm });
    }
}

fn search(g: &Graph, mut cells: Cells, best: &mut Option<Best>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|&(i, c)| (c.len(), i))
        .map(|(i, _)| i);
    let Some(target) = target else {
        leaf(g, &cells, best);
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // a twin of a tried vertex leads to the same leaves via the
        // transposition automorphism
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        next[target] = vec![v];
        next.insert(
            target + 1,
            cell.iter().copied().filter(|&u| u != v).collect(),
        );
        search(g, next, best);
    }
}

/// A permutation `old -> new` such that relabeling by it yields the same
/// graph for every member of an isomorphism class.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    best.expect("search reaches at least one leaf").perm
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
