//! Bernoulli numbers with `t/(e^t - 1) = Σ B_k t^k/k!`, so `B_1 = -1/2`.

use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

fn memo() -> &'static Mutex<Vec<Rational>> {
    static MEMO: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![Rational::from(1)]))
}

/// `B_k`, memoized; computed from `Σ_{j=0}^{k} C(k+1, j) B_j = 0`.
pub fn bernoulli_number(k: usize) -> Rational {
    let mut table = memo().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= k {
        let m = table.len();
        let mut s = Rational::new();
        for (j, b) in table.iter().enumerate() {
            let c = Integer::from(Integer::binomial_u(m as u32 + 1, j as u32));
            s += Rational::from(b * c);
        }
        table.push(-s / (m as u32 + 1));
    }
    table[k].clone()
}

pub fn factorial(k: usize) -> Integer {
    Integer::from(Integer::factorial(k as u32))
}
