use std::fmt;

use super::{
    caterpillar, cocktail_party, complete, cycle, family_h, generalized_petersen, grs, hjk, hypercube, kneser,
    multipartite, path, star, CaterpillarSpec, FamilyError, FamilyHSpec,
};
use crate::graph::Graph;

/// Parts of a complete multipartite graph, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec {
    pub parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KneserSpec {
    pub n: usize,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenPetersenSpec {
    pub n: usize,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrsSpec {
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HjkSpec {
    pub j: usize,
    pub k: usize,
}

/// A named construction together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CocktailParty(usize),
    Hypercube(usize),
    Multipartite(MultipartiteSpec),
    Kneser(KneserSpec),
    GenPetersen(GenPetersenSpec),
    Grs(GrsSpec),
    Hjk(HjkSpec),
    Caterpillar(CaterpillarSpec),
    FamilyH(FamilyHSpec),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::CocktailParty(t) => cocktail_party(*t),
            FamilySpec::Hypercube(d) => hypercube(*d),
            FamilySpec::Multipartite(s) => multipartite(&s.parts),
            FamilySpec::Kneser(s) => kneser(s.n, s.k),
            FamilySpec::GenPetersen(s) => generalized_petersen(s.n, s.k),
            FamilySpec::Grs(s) => grs(s.r, s.s),
            FamilySpec::Hjk(s) => hjk(s.j, s.k),
            FamilySpec::Caterpillar(s) => caterpillar(s),
            FamilySpec::FamilyH(s) => family_h(s),
        }
    }
}

fn list(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "-".to_string();
    }
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Star(n) => write!(f, "star {n}"),
            FamilySpec::CocktailParty(t) => write!(f, "cocktail {t}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube {d}"),
            FamilySpec::Multipartite(s) => write!(f, "multipartite {}", list(&s.parts)),
            FamilySpec::Kneser(s) => write!(f, "kneser {} {}", s.n, s.k),
            FamilySpec::GenPetersen(s) => write!(f, "petersen {} {}", s.n, s.k),
            FamilySpec::Grs(s) => write!(f, "grs {} {}", s.r, s.s),
            FamilySpec::Hjk(s) => write!(f, "hjk {} {}", s.j, s.k),
            FamilySpec::Caterpillar(s) => {
                write!(f, "caterpillar {}", list(&s.t))?;
                if !s.subdivisions.is_empty() {
                    write!(f, " subdiv={}", list(&s.subdivisions))?;
                }
                Ok(())
            }
            FamilySpec::FamilyH(s) => write!(
                f,
                "family-h blocks={} pendants={} paths={}",
                list(&s.blocks),
                list(&s.pendant_at_block),
                list(&s.paths_at_u)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_build() {
        let s = FamilySpec::Multipartite(MultipartiteSpec { parts: vec![5, 5, 5] });
        assert_eq!(s.to_string(), "multipartite 5,5,5");
        assert_eq!(s.build().unwrap().order(), 15);
        let c = FamilySpec::Caterpillar(CaterpillarSpec::new(vec![2, 0, 3]).with_subdivisions(vec![0; 7]));
        assert_eq!(c.to_string(), "caterpillar 2,0,3 subdiv=0,0,0,0,0,0,0");
        assert_eq!(c.build().unwrap().order(), 8);
        assert_eq!(FamilySpec::Grs(GrsSpec { r: 5, s: 3 }).to_string(), "grs 5 3");
        let h = FamilySpec::FamilyH(FamilyHSpec { blocks: vec![2], ..Default::default() });
        assert_eq!(h.to_string(), "family-h blocks=2 pendants=- paths=-");
    }
}
