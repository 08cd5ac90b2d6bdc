//! Operator lists as printed, in `LieBasis::ALL` order
//! (`f1 f2 f12 e1 e2 e12 h1 h2`). Text uses the parser's syntax; dual
//! variables are spelled `xi_*` / `dxi_*`.

use crate::liealg::WeylGroupElem;

pub(crate) fn table(w: WeylGroupElem) -> Option<[&'static str; 8]> {
    Some(match w {
        WeylGroupElem::E => [
            "-dx + 1/2*y*dz",
            "-dy - 1/2*x*dz",
            "-dz",
            "x^2*dx + (z - 1/2*x*y)*dy + (1/4*x^2*y + 1/2*x*z)*dz + (l1 + 2)*x",
            "y^2*dy - (z + 1/2*x*y)*dx - (1/4*x*y^2 - 1/2*y*z)*dz + (l2 + 2)*y",
            "(x*z + 1/2*x^2*y)*dx + (y*z - 1/2*x*y^2)*dy + (z^2 + 1/4*x^2*y^2)*dz + (l1 + l2 + 4)*z + 1/2*(l1 - l2)*x*y",
            "2*x*dx - y*dy + z*dz + l1 + 2",
            "-x*dx + 2*y*dy + z*dz + l2 + 2",
        ],
        WeylGroupElem::S1 => [
            "-x^2*dx - (z - 1/2*x*y)*dy - (1/4*x^2*y + 1/2*x*z)*dz + l1*x",
            "dz",
            "-dy - 1/2*x*dz",
            "dx - 1/2*y*dz",
            "-(x*z + 1/2*x^2*y)*dx - (y*z - 1/2*x*y^2)*dy - (z^2 + 1/4*x^2*y^2)*dz - (l2 + 3)*z + 1/2*(2*l1 + l2 + 3)*x*y",
            "y^2*dy - (z + 1/2*x*y)*dx - (1/4*x*y^2 - 1/2*y*z)*dz + (l1 + l2 + 3)*y",
            "-2*x*dx + y*dy - z*dz + l1",
            "x*dx + y*dy + 2*z*dz + l2 + 3",
        ],
        WeylGroupElem::S1S2 => [
            "-(x*z + 1/2*x^2*y)*dx - (y*z - 1/2*x*y^2)*dy - (z^2 + 1/4*x^2*y^2)*dz + (l1 - 1)*z - 1/2*(l1 + 2*l2 + 3)*x*y",
            "-dx + 1/2*y*dz",
            "-y^2*dy + (z + 1/2*x*y)*dx + (1/4*x*y^2 - 1/2*y*z)*dz + (l1 + l2 + 1)*y",
            "dz",
            "x^2*dx + (z - 1/2*x*y)*dy + (1/4*x^2*y + 1/2*x*z)*dz + (l2 + 2)*x",
            "dy + 1/2*x*dz",
            "-x*dx - y*dy - 2*z*dz + l1 - 1",
            "2*x*dx - y*dy + z*dz + l2 + 2",
        ],
        WeylGroupElem::S1S2S1 => [
            "-y^2*dy + (z + 1/2*x*y)*dx + (1/4*x*y^2 - 1/2*y*z)*dz + l1*y",
            "-x^2*dx - (z - 1/2*x*y)*dy - (1/4*x^2*y + 1/2*x*z)*dz + l2*x",
            "(x*z + 1/2*x^2*y)*dx + (y*z - 1/2*x*y^2)*dy + (z^2 + 1/4*x^2*y^2)*dz - (l1 + l2)*z + 1/2*(l1 - l2)*x*y",
            "dy + 1/2*x*dz",
            "dx - 1/2*y*dz",
            "-dz",
            "x*dx - 2*y*dy - z*dz + l1",
            "-2*x*dx + y*dy - z*dz + l2",
        ],
        _ => return None,
    })
}

pub(crate) fn hat_table(w: WeylGroupElem) -> Option<[&'static str; 8]> {
    Some(match w {
        WeylGroupElem::E => [
            "-xi_x - 1/2*xi_z*dxi_y",
            "-xi_y + 1/2*xi_z*dxi_x",
            "-xi_z",
            "-xi_y*dxi_z + (xi_x*dxi_x + 1/2*xi_z*dxi_z - l1)*dxi_x - 1/2*(xi_y + 1/2*xi_z*dxi_x)*dxi_x*dxi_y",
            "xi_x*dxi_z + (xi_y*dxi_y + 1/2*xi_z*dxi_z - l2)*dxi_y - 1/2*(xi_x - 1/2*xi_z*dxi_y)*dxi_x*dxi_y",
            "(xi_x*dxi_x + xi_y*dxi_y + xi_z*dxi_z - l1 - l2)*dxi_z - 1/2*(xi_x*dxi_x - xi_y*dxi_y - l1 + l2 - 1/2*xi_z*dxi_x*dxi_y)*dxi_x*dxi_y",
            "-2*xi_x*dxi_x + xi_y*dxi_y - xi_z*dxi_z + l1",
            "xi_x*dxi_x - 2*xi_y*dxi_y - xi_z*dxi_z + l2",
        ],
        WeylGroupElem::S1 => [
            "xi_y*dxi_z - x*(x*dx - 1/2*xi_z*dxi_z - l1) - 1/2*x*(xi_y - 1/2*x*xi_z)*dxi_y",
            "xi_z",
            "-xi_y - 1/2*x*xi_z",
            "dx + 1/2*xi_z*dxi_y",
            "(x*dx - xi_y*dxi_y - xi_z*dxi_z + l2)*dxi_z + 1/2*x*(x*dx + xi_y*dxi_y - 1/2*x*xi_z*dxi_y - 2*l1 - l2 - 1)*dxi_y",
            "dx*dxi_z + (xi_y*dxi_y + 1/2*xi_z*dxi_z - l1 - l2 - 1/2)*dxi_y + 1/2*x*(dx - 1/2*xi_z*dxi_y)*dxi_y",
            "-2*x*dx - xi_y*dxi_y + xi_z*dxi_z + l1",
            "x*dx - xi_y*dxi_y - 2*xi_z*dxi_z + l2",
        ],
        WeylGroupElem::S1S2 => [
            "-z*(-xi_x*dxi_x + y*dy + z*dz - l1) + 1/2*y*(-xi_x*dxi_x - y*dy - 1/2*y*dxi_x*dz + 2*l2 + l1 + 1)*dxi_x",
            "-xi_x + 1/2*y*dz",
            "xi_x*z - y*(y*dy + 1/2*z*dz - l1 - l2 - 1/2) - 1/2*y*(xi_x + 1/2*y*dz)*dxi_x",
            "dz",
            "z*dy + (xi_x*dxi_x - 1/2*z*dz - l2)*dxi_x + 1/2*y*(dy + 1/2*dz*dxi_x)*dxi_x",
            "dy - 1/2*dxi_x*dz",
            "xi_x*dxi_x - y*dy - 2*z*dz + l1",
            "-2*xi_x*dxi_x - y*dy + z*dz + l2",
        ],
        _ => return None,
    })
}
