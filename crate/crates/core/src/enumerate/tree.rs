use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Depth at which the tree is cut into independent parallel work items.
pub const DEFAULT_SPLIT_DEPTH: u32 = 8;

/// Visits every numerical semigroup of genus `<= genus_bound`, `N` included,
/// depth first with children in ascending order of the removed generator.
/// Returns the number of visits.
pub fn enumerate_tree<F>(genus_bound: u32, mut visitor: F) -> Result<u64>
where
    F: FnMut(&NumericalSemigroup),
{
    let mut count = 0u64;
    walk_subtree(
        NumericalSemigroup::full(),
        genus_bound,
        false,
        &mut |s: &NumericalSemigroup| {
            visitor(s);
            count += 1;
            Ok(())
        },
    )?;
    Ok(count)
}

/// Parameters for a (possibly parallel) fold over the semigroup tree.
#[derive(Clone, Debug)]
pub struct TreeWalk {
    pub genus_bound: u32,
    /// 1 runs everything on the calling thread.
    pub workers: usize,
    pub split_depth: u32,
    /// Rebuild every child from its atoms and compare; slow.
    pub validate_children: bool,
}

impl TreeWalk {
    pub fn new(genus_bound: u32) -> Self {
        Self {
            genus_bound,
            workers: 1,
            split_depth: DEFAULT_SPLIT_DEPTH,
            validate_children: false,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    /// Folds `visit` over the tree. Each worker folds whole subtrees rooted
    /// at `split_depth` into its own accumulator; partial results are then
    /// combined with `merge`. The result is independent of the worker count
    /// as long as `merge` is associative and commutative.
    pub fn fold<A, I, V, M>(&self, init: I, visit: V, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        V: Fn(&mut A, &NumericalSemigroup) -> Result<()> + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let root = NumericalSemigroup::full();
        if self.workers <= 1 {
            let mut acc = init();
            walk_subtree(root, self.genus_bound, self.validate_children, &mut |s| {
                visit(&mut acc, s)
            })?;
            return Ok(acc);
        }

        let split = self.split_depth.min(self.genus_bound);
        let mut shallow = init();
        let mut frontier = Vec::new();
        let mut stack = vec![root];
        while let Some(s) = stack.pop() {
            if s.genus() == split {
                frontier.push(s);
                continue;
            }
            visit(&mut shallow, &s)?;
            let kids = children_checked(&s, self.validate_children)?;
            stack.extend(kids.into_iter().rev());
        }

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        let deep = pool.install(|| {
            frontier
                .into_par_iter()
                .map(|s| {
                    let mut acc = init();
                    walk_subtree(s, self.genus_bound, self.validate_children, &mut |t| {
                        visit(&mut acc, t)
                    })?;
                    Ok(acc)
                })
                .try_reduce(&init, |a, b| Ok(merge(a, b)))
        })?;
        Ok(merge(shallow, deep))
    }
}

fn walk_subtree<F>(
    root: NumericalSemigroup,
    genus_bound: u32,
    validate: bool,
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&NumericalSemigroup) -> Result<()>,
{
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        visit(&s)?;
        if s.genus() < genus_bound {
            let kids = children_checked(&s, validate)?;
            stack.extend(kids.into_iter().rev());
        }
    }
    Ok(())
}

/// Children of `s`, with the tree's structural facts asserted: each child
/// has genus one more than `s`, its Frobenius number is the removed
/// generator, and that Frobenius number is at most `2g - 1`.
fn children_checked(s: &NumericalSemigroup, validate: bool) -> Result<Vec<NumericalSemigroup>> {
    let genus = s.genus();
    let removed: Vec<u32> = s.effective_generators().collect();
    let kids = s.children()?;
    for (child, &a) in kids.iter().zip(&removed) {
        let g = child.genus();
        if g != genus + 1 || child.frobenius() != Some(a) || a > 2 * g - 1 {
            return Err(Error::InvariantViolation(format!(
                "child {child} of {s} by removing {a}: genus {g}, frobenius {:?}",
                child.frobenius()
            )));
        }
        if validate {
            let rebuilt = NumericalSemigroup::from_generators(child.minimal_generators())?;
            if &rebuilt != child {
                return Err(Error::InvariantViolation(format!(
                    "incremental child {child:?} differs from closure {rebuilt:?}"
                )));
            }
        }
    }
    Ok(kids)
}
