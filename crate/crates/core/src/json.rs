//! JSON interchange for series, normal forms and closures.
//!
//! Horizontal series: `{"n_strands", "max_degree", "terms": [{"word": [[i,j],...], "re", "im"}]}`
//! with words listed bottom to top in graded-lex order. Circle series replace
//! `n_strands` by `"circles"` and each word by `"slots"`: per circle, the
//! chord labels met along its orientation.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    CircleDiagram, CircleSeries, HorizontalSeries, HorizontalWord, NormalFormSeries, SkeletonKey,
};
use crate::closure::ClosureResult;
use crate::error::{Error, Result};
use crate::geometry::ConfigLoop;
use crate::Complex64;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct WordTerm {
    pub word: Vec<[usize; 2]>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct HorizontalJson {
    pub n_strands: usize,
    pub max_degree: usize,
    pub terms: Vec<WordTerm>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct DiagramTerm {
    pub slots: Vec<Vec<u32>>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CircleJson {
    pub circles: usize,
    pub max_degree: usize,
    pub terms: Vec<DiagramTerm>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct LinkJson {
    pub components: usize,
    pub cycles: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub reduced: CircleJson,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct LoopSegmentJson {
    pub letter: usize,
    pub sign: i32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct LoopJson {
    pub n_strands: usize,
    pub segments: Vec<LoopSegmentJson>,
}

/// Document written by `kontsevich compute`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ComputeJson {
    pub word: String,
    pub braid: HorizontalJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub link: Option<LinkJson>,
}

fn word_term(w: &HorizontalWord, c: Complex64) -> WordTerm {
    WordTerm {
        word: w.chords().iter().map(|p| [p.i(), p.j()]).collect(),
        re: c.re,
        im: c.im,
    }
}

fn diagram_term(d: &CircleDiagram, c: Complex64) -> DiagramTerm {
    DiagramTerm {
        slots: d.circles().to_vec(),
        re: c.re,
        im: c.im,
    }
}

impl From<&HorizontalSeries> for HorizontalJson {
    fn from(s: &HorizontalSeries) -> Self {
        Self {
            n_strands: s.n_strands(),
            max_degree: s.max_degree(),
            terms: s.terms().map(|(w, &c)| word_term(w, c)).collect(),
        }
    }
}

impl HorizontalJson {
    pub fn from_normal_form(nf: &NormalFormSeries<HorizontalWord>) -> Result<Self> {
        let SkeletonKey::Strands(n_strands) = nf.skeleton else {
            return Err(Error::Json("normal form is not over a braid skeleton".into()));
        };
        Ok(Self {
            n_strands,
            max_degree: nf.max_degree,
            terms: nf.terms().map(|(w, c)| word_term(w, c)).collect(),
        })
    }

    pub fn to_series(&self) -> Result<HorizontalSeries> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let pairs: Vec<(usize, usize)> = t.word.iter().map(|p| (p[0], p[1])).collect();
                Ok((
                    HorizontalWord::from_pairs(self.n_strands, &pairs)?,
                    Complex64::new(t.re, t.im),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        HorizontalSeries::from_terms(self.n_strands, self.max_degree, terms)
    }
}

impl From<&CircleSeries> for CircleJson {
    fn from(s: &CircleSeries) -> Self {
        Self {
            circles: s.n_circles(),
            max_degree: s.max_degree(),
            terms: s.terms().map(|(d, &c)| diagram_term(d, c)).collect(),
        }
    }
}

impl CircleJson {
    pub fn from_normal_form(nf: &NormalFormSeries<CircleDiagram>) -> Result<Self> {
        let SkeletonKey::Circles(circles) = nf.skeleton else {
            return Err(Error::Json("normal form is not over circles".into()));
        };
        Ok(Self {
            circles,
            max_degree: nf.max_degree,
            terms: nf.terms().map(|(d, c)| diagram_term(d, c)).collect(),
        })
    }

    pub fn to_series(&self) -> Result<CircleSeries> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((CircleDiagram::new(t.slots.clone())?, Complex64::new(t.re, t.im))))
            .collect::<Result<Vec<_>>>()?;
        CircleSeries::from_terms(self.circles, self.max_degree, terms)
    }
}

impl LinkJson {
    pub fn from_closure(result: &ClosureResult) -> Result<Self> {
        Ok(Self {
            components: result.skeleton.n_components(),
            cycles: result.skeleton.cycles.clone(),
            reduced: CircleJson::from_normal_form(&result.reduced)?,
        })
    }
}

impl From<&ConfigLoop> for LoopJson {
    fn from(lp: &ConfigLoop) -> Self {
        Self {
            n_strands: lp.n_strands(),
            segments: lp
                .segments()
                .iter()
                .map(|s| LoopSegmentJson {
                    letter: s.letter.generator,
                    sign: s.letter.sign(),
                })
                .collect(),
        }
    }
}

pub fn to_string<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Json(e.to_string()))
}

pub fn from_str<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}
