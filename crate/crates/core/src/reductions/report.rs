use std::fmt;

use super::Contract;
use crate::instances::SizeParam;

/// One oracle call made by a Turing reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryRecord {
    pub summary: String,
    pub size: u64,
    pub answer: bool,
}

/// Sizes observed on one invocation, checked against the declared bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub name: String,
    pub input_param: SizeParam,
    pub input_size: u64,
    pub output_param: SizeParam,
    /// For Turing reductions, the largest query size.
    pub output_size: u64,
    pub k1: u64,
    pub k2: u64,
    pub short_ok: bool,
    pub queries: Vec<QueryRecord>,
}

impl ReductionReport {
    pub fn many_one(name: &str, contract: Contract, input_size: u64, output_size: u64) -> Self {
        ReductionReport {
            name: name.to_string(),
            input_param: contract.input,
            input_size,
            output_param: contract.output,
            output_size,
            k1: contract.k1,
            k2: contract.k2,
            short_ok: contract.holds(input_size, output_size),
            queries: Vec::new(),
        }
    }

    /// Every query must meet the bound on its own.
    pub fn turing(
        name: &str,
        contract: Contract,
        input_size: u64,
        queries: Vec<QueryRecord>,
    ) -> Self {
        let short_ok = queries.iter().all(|q| contract.holds(input_size, q.size));
        ReductionReport {
            name: name.to_string(),
            input_param: contract.input,
            input_size,
            output_param: contract.output,
            output_size: queries.iter().map(|q| q.size).max().unwrap_or(0),
            k1: contract.k1,
            k2: contract.k2,
            short_ok,
            queries,
        }
    }

    /// `(output - k2) / (k1 * input)`, the slack left in the bound.
    pub fn ratio(&self) -> f64 {
        size_ratio(self.k1, self.k2, self.input_size, self.output_size)
    }
}

pub fn size_ratio(k1: u64, k2: u64, input: u64, output: u64) -> f64 {
    let denom = (k1 * input) as f64;
    if denom == 0.0 {
        return if output <= k2 { 0.0 } else { f64::INFINITY };
    }
    (output as f64 - k2 as f64) / denom
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "REDUCE\t{}\tIN\t{}={}\tOUT\t{}={}\tK1\t{}\tK2\t{}\tSHORT\t{}",
            self.name,
            self.input_param,
            self.input_size,
            self.output_param,
            self.output_size,
            self.k1,
            self.k2,
            if self.short_ok { "ok" } else { "FAIL" }
        )?;
        for (i, q) in self.queries.iter().enumerate() {
            writeln!(
                f,
                "QUERY\t{}\tSIZE\t{}\tANSWER\t{}",
                i + 1,
                q.size,
                if q.answer { "y" } else { "n" }
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_line_format() {
        let c = Contract::new(SizeParam::Vbl, SizeParam::Ver, 8, 0);
        let r = ReductionReport::many_one("sat2_to_2cvc3", c, 3, 14);
        assert!(r.short_ok);
        assert_eq!(
            r.to_string(),
            "REDUCE\tsat2_to_2cvc3\tIN\tm_vbl=3\tOUT\tm_ver=14\tK1\t8\tK2\t0\tSHORT\tok\n"
        );
        let bad = ReductionReport::many_one("x", c, 1, 9);
        assert!(!bad.short_ok);
    }

    #[test]
    fn turing_report_lists_queries() {
        let c = Contract::new(SizeParam::Set, SizeParam::Ver, 1, 0);
        let q = |answer| QueryRecord {
            summary: String::new(),
            size: 2,
            answer,
        };
        let r = ReductionReport::turing("t", c, 2, vec![q(true), q(false)]);
        assert!(r.short_ok);
        let text = r.to_string();
        assert!(text.ends_with("QUERY\t1\tSIZE\t2\tANSWER\ty\nQUERY\t2\tSIZE\t2\tANSWER\tn\n"));
    }

    #[test]
    fn ratio_of_exact_fit() {
        assert_eq!(size_ratio(3, 2, 4, 14), 1.0);
        assert_eq!(size_ratio(1, 0, 14, 14), 1.0);
    }
}
