#pragma once

#include "borel/error.hpp"
#include "borel/monomial.hpp"
#include "borel/monomial_ideal.hpp"
#include "borel/polynomial.hpp"
#include "borel/groebner.hpp"
#include "borel/random.hpp"
#include "borel/gin.hpp"
#include "borel/hilbert.hpp"
#include "borel/betti.hpp"
#include "borel/koszul.hpp"
#include "borel/f_index.hpp"
#include "borel/reduction.hpp"
#include "borel/lefschetz.hpp"
#include "borel/codim3.hpp"
#include "borel/io.hpp"
#include "borel/report.hpp"
#include "borel/gallery.hpp"
