#ifndef QRD_QRD_HPP
#define QRD_QRD_HPP

#include "qrd/approx.hpp"
#include "qrd/classes.hpp"
#include "qrd/domination.hpp"
#include "qrd/exact.hpp"
#include "qrd/graph.hpp"
#include "qrd/ilp.hpp"
#include "qrd/labeling.hpp"
#include "qrd/reductions.hpp"
#include "qrd/solve.hpp"

#endif  // QRD_QRD_HPP
