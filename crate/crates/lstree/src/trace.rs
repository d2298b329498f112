use std::collections::HashSet;
use std::fmt::Write as _;

use affperm::AffinePermutation;

use crate::children::ls_children;
use crate::error::LsTreeError;
use crate::expand::normalize;

/// Render the transition tree of `f` as indented text, one vertex per line.
///
/// Vertices are listed in preorder with two spaces of indentation per level,
/// a `+`/`-` prefix for the edge sign, `→ leaf [shape]` on 0-Grassmannian
/// vertices, and `(seen)` on repeated labels, whose subtrees are printed
/// only at their first occurrence.  The number of unmarked lines equals
/// `stats.nodes` of [`crate::expand`].
pub fn trace(f: &AffinePermutation, k: u32) -> Result<String, LsTreeError> {
    let root = normalize(f, k)?;
    let mut out = String::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<(AffinePermutation, usize, Option<bool>)> = vec![(root, 0, None)];
    while let Some((node, depth, sign)) = stack.pop() {
        out.push_str(&"  ".repeat(depth));
        match sign {
            Some(true) => out.push('+'),
            Some(false) => out.push('-'),
            None => {}
        }
        write!(out, "[{node}]").expect("writing to a string");
        if !seen.insert(node.window().to_vec()) {
            out.push_str(" (seen)\n");
            continue;
        }
        if node.is_zero_grassmannian() {
            let shape = node.grassmannian_shape(k).expect("leaf windows ascend");
            writeln!(out, " → leaf {shape}").expect("writing to a string");
            continue;
        }
        out.push('\n');
        let (plus, minus) = ls_children(&node, k).expect("interior vertices have children");
        for child in minus.into_iter().rev() {
            stack.push((child, depth + 1, Some(false)));
        }
        for child in plus.into_iter().rev() {
            stack.push((child, depth + 1, Some(true)));
        }
    }
    Ok(out)
}
