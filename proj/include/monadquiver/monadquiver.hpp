#pragma once

#include "monadquiver/algebra.hpp"
#include "monadquiver/cartesian.hpp"
#include "monadquiver/field.hpp"
#include "monadquiver/linalg.hpp"
#include "monadquiver/module.hpp"
#include "monadquiver/quiver.hpp"
#include "monadquiver/quiver_module.hpp"
#include "monadquiver/report.hpp"
#include "monadquiver/scalar_change.hpp"
#include "monadquiver/vertex_functors.hpp"
