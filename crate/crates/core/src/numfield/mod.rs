//! Number fields `Q[z]/(m(z))`: exact arithmetic, traces, exact signs under
//! real embeddings and multiprecision complex embeddings.

pub mod embed;
pub mod field;
pub mod irreducible;
pub mod poly;

pub use embed::{
    complex_embeddings, embeddings, is_totally_positive, real_embeddings, sign_under_embedding, ComplexEmbedding,
    EmbeddingHandle, RealEmbedding, DEFAULT_MAX_SIGN_BITS,
};
pub use field::{NFElement, NumberField};
