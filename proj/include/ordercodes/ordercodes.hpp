#pragma once

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "order_domain.hpp"
#include "code.hpp"
#include "inverse_system.hpp"
#include "syndrome_table.hpp"
#include "bms.hpp"
#include "error_eval.hpp"
#include "montecarlo.hpp"
#include "config.hpp"
#include "golden.hpp"
