#pragma once

#include "ade/algebra/cyclotomic.hpp"
#include "ade/algebra/fold.hpp"
#include "ade/algebra/matrix.hpp"
#include "ade/algebra/polynomial.hpp"
#include "ade/algebra/rational.hpp"
#include "ade/algebra/rational_function.hpp"
#include "ade/errors.hpp"
#include "ade/graphs.hpp"
#include "ade/io.hpp"
#include "ade/su2/characters.hpp"
#include "ade/su2/group.hpp"
#include "ade/su2/molien.hpp"
#include "ade/verify.hpp"
#include "ade/weights.hpp"
