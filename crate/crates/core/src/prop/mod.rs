//! Terms of the free colored operad and the three resolved models.

mod model;
mod sexpr;
mod term;

pub use model::{Family, GeneratorId, GeneratorInfo, Model};
pub use sexpr::{parse_sum, parse_term, sum_to_sexpr, term_to_sexpr};
pub use term::{
    canonicalize, differential_squared, differentiate, evaluate_sum, evaluate_with, graph_evaluate, FormalSum,
    GraphTerm, Node,
};
