//! Hopcroft partition refinement on complete DFAs.

use super::dfa::{Dfa, StateId};

/// Returns the minimal complete DFA for `L(dfa)`.
///
/// Unreachable states are dropped first, then Nerode-equivalent states are
/// merged. The result is numbered in breadth-first order from the initial
/// state, so two automata with the same language minimize to identical
/// values.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let k = dfa.alphabet().len();
    let order = dfa.bfs_order();
    let n = order.len();
    let mut index = vec![usize::MAX; dfa.num_states()];
    for (i, &q) in order.iter().enumerate() {
        index[q] = i;
    }
    let delta: Vec<StateId> = order
        .iter()
        .flat_map(|&q| dfa.row(q).iter().map(|&p| index[p]))
        .collect();
    let finals: Vec<bool> = order.iter().map(|&q| dfa.is_final(q)).collect();

    let block_of = refine(n, k, &delta, &finals);

    // Renumber blocks by BFS from the initial block (state 0 after pruning).
    let num_blocks = block_of.iter().max().map_or(0, |&b| b + 1);
    let mut repr = vec![usize::MAX; num_blocks];
    for q in 0..n {
        if repr[block_of[q]] == usize::MAX {
            repr[block_of[q]] = q;
        }
    }
    let mut new_id = vec![usize::MAX; num_blocks];
    let mut queue = vec![block_of[0]];
    new_id[block_of[0]] = 0;
    let mut i = 0;
    while i < queue.len() {
        let b = queue[i];
        i += 1;
        let q = repr[b];
        for a in 0..k {
            let t = block_of[delta[q * k + a]];
            if new_id[t] == usize::MAX {
                new_id[t] = queue.len();
                queue.push(t);
            }
        }
    }
    let mut out_delta = Vec::with_capacity(queue.len() * k);
    let mut out_finals = Vec::with_capacity(queue.len());
    for &b in &queue {
        let q = repr[b];
        out_finals.push(finals[q]);
        out_delta.extend((0..k).map(|a| new_id[block_of[delta[q * k + a]]]));
    }
    Dfa::new(dfa.alphabet().clone(), 0, out_finals, out_delta)
        .expect("quotient of a complete DFA is complete")
}

struct Block {
    start: usize,
    end: usize,
    marked: usize,
}

/// Coarsest partition compatible with `finals` and stable under `delta`.
/// Returns the block id of every state.
fn refine(n: usize, k: usize, delta: &[StateId], finals: &[bool]) -> Vec<usize> {
    // Inverse transitions in CSR form, keyed by (symbol, target).
    let mut offsets = vec![0usize; k * n + 1];
    for q in 0..n {
        for a in 0..k {
            offsets[a * n + delta[q * k + a] + 1] += 1;
        }
    }
    for i in 1..offsets.len() {
        offsets[i] += offsets[i - 1];
    }
    let mut fill = offsets.clone();
    let mut sources = vec![0usize; k * n];
    for q in 0..n {
        for a in 0..k {
            let slot = a * n + delta[q * k + a];
            sources[fill[slot]] = q;
            fill[slot] += 1;
        }
    }

    // Finals first, then the rest; `elems` is grouped by block.
    let mut elems: Vec<StateId> = (0..n).filter(|&q| finals[q]).collect();
    let num_final = elems.len();
    elems.extend((0..n).filter(|&q| !finals[q]));
    let mut pos = vec![0usize; n];
    for (i, &q) in elems.iter().enumerate() {
        pos[q] = i;
    }
    let mut blocks = Vec::new();
    let mut block_of = vec![0usize; n];
    for (start, end) in [(0, num_final), (num_final, n)] {
        if start < end {
            for &q in &elems[start..end] {
                block_of[q] = blocks.len();
            }
            blocks.push(Block {
                start,
                end,
                marked: 0,
            });
        }
    }

    let mut in_work: Vec<bool> = vec![false; blocks.len() * k];
    let mut work: Vec<(usize, usize)> = Vec::new();
    if blocks.len() == 2 {
        let smaller = if num_final <= n - num_final { 0 } else { 1 };
        for a in 0..k {
            work.push((smaller, a));
            in_work[smaller * k + a] = true;
        }
    }

    let mut splitter: Vec<StateId> = Vec::new();
    let mut touched: Vec<usize> = Vec::new();
    while let Some((b, a)) = work.pop() {
        in_work[b * k + a] = false;
        splitter.clear();
        for &t in &elems[blocks[b].start..blocks[b].end] {
            let slot = a * n + t;
            splitter.extend_from_slice(&sources[offsets[slot]..offsets[slot + 1]]);
        }
        for &s in &splitter {
            let y = block_of[s];
            let blk = &mut blocks[y];
            if blk.marked == 0 {
                touched.push(y);
            }
            let dest = blk.start + blk.marked;
            blk.marked += 1;
            let other = elems[dest];
            elems.swap(pos[s], dest);
            pos[other] = pos[s];
            pos[s] = dest;
        }
        for y in touched.drain(..) {
            let (start, end, marked) = (blocks[y].start, blocks[y].end, blocks[y].marked);
            blocks[y].marked = 0;
            if marked == end - start {
                continue;
            }
            // Marked prefix becomes a new block; `y` keeps the remainder.
            let z = blocks.len();
            blocks.push(Block {
                start,
                end: start + marked,
                marked: 0,
            });
            blocks[y].start = start + marked;
            for &q in &elems[start..start + marked] {
                block_of[q] = z;
            }
            in_work.extend(std::iter::repeat_n(false, k));
            let new_smaller = marked <= end - start - marked;
            for c in 0..k {
                if in_work[y * k + c] || new_smaller {
                    work.push((z, c));
                    in_work[z * k + c] = true;
                } else {
                    work.push((y, c));
                    in_work[y * k + c] = true;
                }
            }
        }
    }
    block_of
}
