//! An exact matrix model of the quantum general linear supergroup:
//! the vector representation, its super tensor powers, root vectors,
//! and checks of the defining relations, the Hopf axioms and the
//! left/right translation actions on matrix elements.

mod algebra;
mod hopf;
mod matrix;
mod relations;
mod rep;
mod translation;

pub use algebra::{
    antipode, antipode_word, coproduct, counit, counit_word, format_word, parse_word, word_parity,
    Element, Generator, TensorTerm, Word,
};
pub use hopf::{verify_antipode_counit, verify_coassociativity, verify_hopf};
pub use matrix::LMatrix;
pub use relations::{verify_relations, Check, Report};
pub use rep::{q_index, q_index_inv, root_vector, root_vector_choices, root_vector_via, Rep};
pub use translation::{translation_actions, Functional, MatrixElement};
