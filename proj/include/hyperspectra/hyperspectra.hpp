#ifndef HYPERSPECTRA_HYPERSPECTRA_HPP
#define HYPERSPECTRA_HYPERSPECTRA_HPP

#include "hyperspectra/bisection.hpp"
#include "hyperspectra/canonical.hpp"
#include "hyperspectra/certificates.hpp"
#include "hyperspectra/classify.hpp"
#include "hyperspectra/errors.hpp"
#include "hyperspectra/extremal.hpp"
#include "hyperspectra/families.hpp"
#include "hyperspectra/hypergraph.hpp"
#include "hyperspectra/json_io.hpp"
#include "hyperspectra/spectral.hpp"

#endif  // HYPERSPECTRA_HYPERSPECTRA_HPP
