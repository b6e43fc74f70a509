//! Matroids on small labeled ground sets, faces of their polytopes, and the
//! positroid test.

mod catalog;
mod faces;
mod matroid;
mod noncrossing;
mod positroid;
mod subset;

pub use catalog::{catalog, matroids_of_rank, MAX_CATALOG};
pub use faces::{all_faces, face_matroid, face_matroid_layered, loopless_faces_of_dim, FaceMatroid};
pub use matroid::{Matroid, MAX_GROUND};
pub use noncrossing::{
    component_partition, is_noncrossing_matroid, is_noncrossing_partition, Crossing, CyclicPartition,
};
pub use positroid::{is_positroid, is_positroid_with, PositroidCertificate, PositroidVerdict};
pub use subset::{Subset, MAX_ELEMENTS};
