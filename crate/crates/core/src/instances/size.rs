use std::fmt;
use std::str::FromStr;

use super::Instance;
use crate::error::{Error, Result};

/// The log-space size parameters instances are measured by.
///
/// `Row` and `Col` keep the literal assignment used for the linear systems:
/// `m_row` counts the *columns* (variables) of `A` and `m_col` counts its
/// *rows*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeParam {
    Vbl,
    Cls,
    Ver,
    Edg,
    Set,
    Row,
    Col,
}

impl SizeParam {
    pub const ALL: [SizeParam; 7] = [
        SizeParam::Vbl,
        SizeParam::Cls,
        SizeParam::Ver,
        SizeParam::Edg,
        SizeParam::Set,
        SizeParam::Row,
        SizeParam::Col,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SizeParam::Vbl => "m_vbl",
            SizeParam::Cls => "m_cls",
            SizeParam::Ver => "m_ver",
            SizeParam::Edg => "m_edg",
            SizeParam::Set => "m_set",
            SizeParam::Row => "m_row",
            SizeParam::Col => "m_col",
        }
    }
}

impl fmt::Display for SizeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SizeParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SizeParam::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "size parameter",
                name: s.to_string(),
            })
    }
}

/// Raw (unclamped) value of `param`, if the parameter is defined for the
/// instance's class.
fn raw(instance: &Instance, param: SizeParam) -> Option<usize> {
    use SizeParam::*;
    Some(match (instance, param) {
        (Instance::Cnf(f), Vbl) => f.num_vars(),
        (Instance::Cnf(f), Cls) => f.clauses().len(),
        (Instance::Digraph(g), Ver) => g.num_vertices(),
        (Instance::Digraph(g), Edg) => g.edges().len(),
        (Instance::UGraph(g), Ver) => g.num_vertices(),
        (Instance::UGraph(g), Edg) => g.edges().len(),
        (Instance::Xce(x), Set) => x.sets().len(),
        (Instance::Ap2dm(a), Set) => a.universe(),
        (Instance::Lin(s), Row) => s.num_cols(),
        (Instance::Lin(s), Col) => s.num_rows(),
        (Instance::Xor(x), Vbl) => x.num_vars(),
        (Instance::Xor(x), Cls) => x.constraints().len(),
        _ => return None,
    })
}

/// Value of a size parameter, clamped into the positive integers so that
/// empty instances still take part in shortness arithmetic.
pub fn size_param(instance: &Instance, param: SizeParam) -> Result<u64> {
    raw(instance, param)
        .map(|v| v.max(1) as u64)
        .ok_or_else(|| Error::InvalidParam {
            param: param.to_string(),
            class: instance.class().to_string(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures;
    use crate::instances::Digraph;

    #[test]
    fn figure_one_formula_sizes() {
        let f = Instance::Cnf(figures::fig1_formula());
        assert_eq!(size_param(&f, SizeParam::Vbl).unwrap(), 3);
        assert_eq!(size_param(&f, SizeParam::Cls).unwrap(), 4);
    }

    #[test]
    fn figure_three_graph_sizes() {
        let g = Instance::Digraph(figures::fig3_graph());
        assert_eq!(size_param(&g, SizeParam::Ver).unwrap(), 6);
        assert_eq!(size_param(&g, SizeParam::Edg).unwrap(), 5);
    }

    #[test]
    fn single_vertex_edge_count_is_clamped() {
        let g = Instance::Digraph(Digraph::new(1, vec![], 0, 0));
        assert_eq!(size_param(&g, SizeParam::Ver).unwrap(), 1);
        assert_eq!(size_param(&g, SizeParam::Edg).unwrap(), 1);
    }

    #[test]
    fn mismatched_param_is_an_error() {
        let g = Instance::Digraph(figures::fig3_graph());
        assert!(matches!(
            size_param(&g, SizeParam::Vbl),
            Err(Error::InvalidParam { .. })
        ));
    }

    #[test]
    fn names_round_trip() {
        for p in SizeParam::ALL {
            assert_eq!(p.name().parse::<SizeParam>().unwrap(), p);
        }
    }
}
