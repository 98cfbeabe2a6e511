#ifndef NNOGRAPH_NNOGRAPH_HPP
#define NNOGRAPH_NNOGRAPH_HPP

#include "nnograph/chordal.hpp"
#include "nnograph/complement_results.hpp"
#include "nnograph/decomposition.hpp"
#include "nnograph/extremal.hpp"
#include "nnograph/fixtures.hpp"
#include "nnograph/generator.hpp"
#include "nnograph/graph.hpp"
#include "nnograph/hamiltonicity.hpp"
#include "nnograph/oracle.hpp"
#include "nnograph/recognition.hpp"
#include "nnograph/variants.hpp"

#endif
