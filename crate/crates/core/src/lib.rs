//! Framed Homfly polynomials of generalized Hopf links `H(k1,k2;n1,n2)`.
//!
//! The closed-form route expands the core strings in the eigenbasis of the
//! meridian maps of the annulus skein ([`basis`], [`meridian`]) and sums
//! eigenvalue powers against plane evaluations ([`hopf`]). The [`oracle`]
//! module evaluates explicit planar diagrams by skein-tree recursion and is
//! used to check the closed form.

pub mod basis;
pub mod cli;
pub mod hopf;
pub mod meridian;
pub mod oracle;
pub mod partitions;
pub mod ring;
