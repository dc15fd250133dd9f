//! Lattice-ordered algebra structure on AM-spaces.

pub mod am;
pub mod center;
pub mod nakano;
pub mod product;
pub mod root;
pub mod tensor;
pub mod verify;
pub mod weight;

pub use am::{am_product, am_product_is_unique, classify_am_algebra, AmClassification, IdentitySweep};
pub use center::{decide_central, mult_operator, operator_norm, CentralDecision, CentralSymbol};
pub use nakano::{nakano_witness, Family, NakanoWitness};
pub use product::{
    is_submultiplicative, peak_element, power, product, submultiplicativity_witness, FnProduct, Product, TensorProduct,
    WeightProduct, ZeroProduct,
};
pub use root::{nth_root, root_residuals, FloatElement, Root, RootResiduals, ROOT_TOLERANCE};
pub use tensor::{decide_tensor, ProductTensor};
pub use verify::{axiom_sample, verify_falgebra_axioms, AxiomReport, Violation};
pub use weight::{wx_membership, Weight, WxMembership, WxWitness};
