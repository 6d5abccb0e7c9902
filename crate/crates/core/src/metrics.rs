//! Primitive-operation counter used by the delay and laziness tests.
//!
//! Graph traversal primitives bump a thread-local counter once per vertex
//! visit and once per scanned adjacency entry. Tests read the counter
//! before and after an action and compare the difference against the
//! complexity-shaped bounds; the counter is monotone and never reset by
//! library code.

use std::cell::Cell;

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

/// Total primitive graph operations performed on this thread so far.
pub fn primitive_ops() -> u64 {
    OPS.with(|c| c.get())
}

pub(crate) fn bump(n: u64) {
    OPS.with(|c| c.set(c.get() + n));
}
