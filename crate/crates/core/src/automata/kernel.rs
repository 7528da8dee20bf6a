use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arithfun::{ArithmeticFunction, UnitValue};

/// Bounds for the fingerprint-based kernel search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelParams {
    pub max_depth: u32,
    pub window: usize,
    pub max_size: usize,
}

impl Default for KernelParams {
    fn default() -> Self {
        KernelParams {
            max_depth: 12,
            window: 512,
            max_size: 4096,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverflowCause {
    Size,
    Depth,
    /// False merges kept appearing as the window was doubled.
    Unstable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    /// Closure was not reached: heuristic evidence that the sequence is not
    /// automatic in this base.
    #[error("kernel did not close: {classes} classes at depth {depth} ({cause:?} bound hit)")]
    Overflow {
        classes: usize,
        depth: u32,
        cause: OverflowCause,
    },
    #[error("base must be at least 2, got {0}")]
    BadBase(u64),
    #[error("window must be positive")]
    EmptyWindow,
    #[error("kernel indices overflow i64 at depth {0}")]
    IndexOverflow(u32),
    #[error("depth {depth} needs indices up to {needed}, beyond the data limit {limit}")]
    BeyondDomain { depth: u32, needed: u64, limit: u64 },
    #[error("kernel transition table is incomplete at class {0}")]
    Incomplete(usize),
}

/// One kernel class, represented by the subsequence `m -> f(q^depth m + residue)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelClass {
    pub depth: u32,
    pub residue: u64,
    pub fingerprint: Vec<UnitValue>,
}

/// A closed `q`-kernel: classes with pairwise distinct fingerprints and a
/// total transition map `class x digit -> class`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QKernel {
    base: u64,
    window: usize,
    classes: Vec<KernelClass>,
    transitions: Vec<Vec<usize>>,
}

impl QKernel {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[KernelClass] {
        &self.classes
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn max_depth(&self) -> u32 {
        self.classes.iter().map(|c| c.depth).max().unwrap_or(0)
    }

    #[cfg(test)]
    pub(crate) fn transitions_mut_for_test(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.transitions
    }
}

/// Largest window, as a multiple of the requested one, tried while
/// resolving false merges.
const MAX_WINDOW_GROWTH: usize = 8;

/// Breadth-first search over `m -> f(q^k m + r)`, identifying two
/// subsequences when their first `window` terms agree.
///
/// A closed result is then confirmed on twice the window: every transition
/// must still land on a class whose subsequence agrees with the child on
/// `2 * window` terms. A disagreement is a false merge; the search restarts
/// with the window doubled, up to `8 * window`.
pub fn compute_kernel(
    f: &ArithmeticFunction,
    base: u64,
    params: KernelParams,
) -> Result<QKernel, KernelError> {
    if base < 2 {
        return Err(KernelError::BadBase(base));
    }
    if params.window == 0 {
        return Err(KernelError::EmptyWindow);
    }
    let mut window = params.window;
    loop {
        let kernel = search(f, base, window, params)?;
        if confirm(f, &kernel, 2 * window as u64)? {
            return Ok(kernel);
        }
        window *= 2;
        if window > params.window * MAX_WINDOW_GROWTH {
            return Err(KernelError::Overflow {
                classes: kernel.len(),
                depth: kernel.max_depth(),
                cause: OverflowCause::Unstable,
            });
        }
    }
}

/// `m -> f(q^depth m + residue)` for `m < len`.
fn subsequence(
    f: &ArithmeticFunction,
    base: u64,
    depth: u32,
    residue: u64,
    len: u64,
) -> Result<Vec<UnitValue>, KernelError> {
    let scale = base
        .checked_pow(depth)
        .filter(|s| s.checked_mul(len).is_some_and(|x| x <= i64::MAX as u64))
        .ok_or(KernelError::IndexOverflow(depth))?;
    let needed = scale * len;
    if let Some(limit) = f.domain_limit() {
        if needed > limit {
            return Err(KernelError::BeyondDomain {
                depth,
                needed,
                limit,
            });
        }
    }
    Ok((0..len)
        .map(|m| f.eval((scale * m + residue) as i64))
        .collect())
}

fn search(
    f: &ArithmeticFunction,
    base: u64,
    window: usize,
    params: KernelParams,
) -> Result<QKernel, KernelError> {
    let fingerprint = |depth, residue| subsequence(f, base, depth, residue, window as u64);

    let root = fingerprint(0, 0)?;
    let mut index: HashMap<Vec<UnitValue>, usize> = HashMap::new();
    index.insert(root.clone(), 0);
    let mut classes = vec![KernelClass {
        depth: 0,
        residue: 0,
        fingerprint: root,
    }];
    let mut transitions: Vec<Vec<usize>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);

    while let Some(id) = queue.pop_front() {
        let (depth, residue) = (classes[id].depth, classes[id].residue);
        let step = base.pow(depth);
        let mut row = Vec::with_capacity(base as usize);
        for digit in 0..base {
            let child_residue = residue + digit * step;
            let fp = fingerprint(depth + 1, child_residue)?;
            let target = match index.get(&fp) {
                Some(&j) => j,
                None => {
                    if depth + 1 > params.max_depth {
                        return Err(KernelError::Overflow {
                            classes: classes.len(),
                            depth: depth + 1,
                            cause: OverflowCause::Depth,
                        });
                    }
                    if classes.len() >= params.max_size {
                        return Err(KernelError::Overflow {
                            classes: classes.len(),
                            depth: depth + 1,
                            cause: OverflowCause::Size,
                        });
                    }
                    let j = classes.len();
                    index.insert(fp.clone(), j);
                    classes.push(KernelClass {
                        depth: depth + 1,
                        residue: child_residue,
                        fingerprint: fp,
                    });
                    transitions.push(Vec::new());
                    queue.push_back(j);
                    j
                }
            };
            row.push(target);
        }
        transitions[id] = row;
    }

    Ok(QKernel {
        base,
        window,
        classes,
        transitions,
    })
}

fn confirm(f: &ArithmeticFunction, kernel: &QKernel, len: u64) -> Result<bool, KernelError> {
    let base = kernel.base;
    let long: Vec<Vec<UnitValue>> = kernel
        .classes
        .iter()
        .map(|c| subsequence(f, base, c.depth, c.residue, len))
        .collect::<Result<_, _>>()?;
    for (class, row) in kernel.classes.iter().zip(&kernel.transitions) {
        let step = base.pow(class.depth);
        for (digit, &target) in row.iter().enumerate() {
            let child = subsequence(
                f,
                base,
                class.depth + 1,
                class.residue + digit as u64 * step,
                len,
            )?;
            if child != long[target] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
