#ifndef BRAIDREP_BRAIDREP_HPP_
#define BRAIDREP_BRAIDREP_HPP_

#include "braidrep/analyze.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/catalog.hpp"
#include "braidrep/construct.hpp"
#include "braidrep/error.hpp"
#include "braidrep/extract.hpp"
#include "braidrep/fivetuple.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/tolerances.hpp"

#endif  // BRAIDREP_BRAIDREP_HPP_
