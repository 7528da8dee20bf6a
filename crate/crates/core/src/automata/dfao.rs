use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{KernelError, QKernel};
use crate::arithfun::{ArithmeticFunction, UnitValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DigitOrder {
    LeastSignificantFirst,
    MostSignificantFirst,
}

/// Deterministic finite automaton with output over base-`q` digits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfao {
    base: u64,
    initial: usize,
    transitions: Vec<Vec<usize>>,
    outputs: Vec<UnitValue>,
    order: DigitOrder,
}

impl Dfao {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.outputs.len()
    }

    pub fn outputs(&self) -> &[UnitValue] {
        &self.outputs
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn digit_order(&self) -> DigitOrder {
        self.order
    }

    /// Digits of `n` in base `q`, least significant first; `0` is `[0]`.
    pub fn digits(&self, mut n: u64) -> Vec<u64> {
        if n == 0 {
            return vec![0];
        }
        let mut d = Vec::new();
        while n > 0 {
            d.push(n % self.base);
            n /= self.base;
        }
        d
    }

    /// Output of the state reached after consuming the digits of `n`.
    pub fn eval(&self, n: u64) -> UnitValue {
        let mut digits = self.digits(n);
        if self.order == DigitOrder::MostSignificantFirst {
            digits.reverse();
        }
        let state = digits
            .into_iter()
            .fold(self.initial, |s, d| self.transitions[s][d as usize]);
        self.outputs[state]
    }

    /// First `n` in `range` where the automaton disagrees with `f`.
    pub fn first_mismatch(
        &self,
        f: &ArithmeticFunction,
        range: std::ops::RangeInclusive<u64>,
    ) -> Option<u64> {
        range
            .into_iter()
            .find(|&n| self.eval(n) != f.eval(n as i64))
    }

    /// Graphviz rendering: one node per state labeled with its output, one
    /// edge per target labeled with the digits leading there, and a point
    /// node marking the initial state.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph dfao {\n");
        out.push_str("    rankdir=LR;\n");
        out.push_str("    node [shape=circle];\n");
        out.push_str("    start [shape=point];\n");
        let _ = writeln!(out, "    start -> s{};", self.initial);
        for (s, output) in self.outputs.iter().enumerate() {
            let _ = writeln!(out, "    s{s} [label=\"s{s} / {output}\"];");
        }
        for (s, row) in self.transitions.iter().enumerate() {
            let mut targets: Vec<usize> = row.clone();
            targets.sort_unstable();
            targets.dedup();
            for t in targets {
                let digits: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|&(_, &x)| x == t)
                    .map(|(d, _)| d.to_string())
                    .collect();
                let _ = writeln!(out, "    s{s} -> s{t} [label=\"{}\"];", digits.join(","));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// One state per kernel class. Reading digit `d` from the class of
/// `m -> f(q^k m + r)` moves to the class of `m -> f(q^(k+1) m + d q^k + r)`,
/// and a state outputs the first term of its subsequence, so reading the
/// digits of `n` least significant first ends in a state whose output is `f(n)`.
pub fn kernel_to_dfao(kernel: &QKernel) -> Result<Dfao, KernelError> {
    let n = kernel.len();
    for (i, row) in kernel.transitions().iter().enumerate() {
        if row.len() as u64 != kernel.base() || row.iter().any(|&t| t >= n) {
            return Err(KernelError::Incomplete(i));
        }
    }
    Ok(Dfao {
        base: kernel.base(),
        initial: 0,
        transitions: kernel.transitions().to_vec(),
        outputs: kernel.classes().iter().map(|c| c.fingerprint[0]).collect(),
        order: DigitOrder::LeastSignificantFirst,
    })
}
