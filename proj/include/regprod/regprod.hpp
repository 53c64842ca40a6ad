#ifndef REGPROD_REGPROD_HPP
#define REGPROD_REGPROD_HPP

#include "regprod/betti.hpp"
#include "regprod/error.hpp"
#include "regprod/experiments.hpp"
#include "regprod/field.hpp"
#include "regprod/free_complex.hpp"
#include "regprod/ideal.hpp"
#include "regprod/linalg.hpp"
#include "regprod/monomial.hpp"
#include "regprod/star_product.hpp"
#include "regprod/taylor.hpp"

#endif // REGPROD_REGPROD_HPP
