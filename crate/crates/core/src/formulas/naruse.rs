//! The finite skew hook formula: `f = n! * sum over E_lambda(mu) of prod 1/h_lambda`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::{Partition, SkewShape};
use crate::error::Result;
use crate::excited::enumerate_excited_finite;
use crate::formulas::series::Verdict;
use crate::rational::{self, factorial, int, recip_product, BigRational};
use crate::tableaux::count_linear_extensions;

/// `n! * sum_D prod_{x in lambda \ D} 1 / h_lambda(x)`.
pub fn naruse_rhs(lambda: &Partition, mu: &Partition) -> Result<BigRational> {
    Ok(excited_sum(lambda, mu)?.1)
}

/// The number of excited diagrams and the scaled hook sum over them.
fn excited_sum(lambda: &Partition, mu: &Partition) -> Result<(usize, BigRational)> {
    let diagrams = enumerate_excited_finite(lambda, mu)?;
    let n = (lambda.size() - mu.size()) as u64;
    let mut total = BigRational::zero();
    for d in &diagrams {
        let hooks = d
            .complement_in(lambda)
            .into_iter()
            .map(|x| lambda.hook_length(x).expect("cell of lambda"));
        total += recip_product(hooks);
    }
    Ok((diagrams.len(), total * int(factorial(n))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaruseReport {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub n: usize,
    #[serde(with = "rational::json")]
    pub lhs: BigRational,
    #[serde(with = "rational::json")]
    pub rhs: BigRational,
    pub diagrams: usize,
    pub verdict: Verdict,
}

/// Compares the tableau count with the excited-diagram sum.
pub fn verify_naruse(lambda: &Partition, mu: &Partition) -> Result<NaruseReport> {
    let shape = SkewShape::from_partitions(lambda, mu)?;
    let f = count_linear_extensions(&shape);
    let (diagrams, rhs) = excited_sum(lambda, mu)?;
    let lhs = int(num_bigint::BigInt::from(f));
    let verdict = if lhs == rhs { Verdict::ExactPass } else { Verdict::Fail };
    Ok(NaruseReport {
        lambda: lambda.parts().to_vec(),
        mu: mu.parts().to_vec(),
        n: shape.n(),
        lhs,
        rhs,
        diagrams,
        verdict,
    })
}
