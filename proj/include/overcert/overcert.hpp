#pragma once

#include "overcert/error.hpp"
#include "overcert/rational.hpp"
#include "overcert/scalar.hpp"
#include "overcert/linalg.hpp"
#include "overcert/polynomial.hpp"
#include "overcert/rng.hpp"
#include "overcert/newton.hpp"
#include "overcert/residual.hpp"
#include "overcert/certify.hpp"
#include "overcert/solver.hpp"
#include "overcert/rootcount.hpp"
#include "overcert/fixtures.hpp"
#include "overcert/io.hpp"
