#pragma once

#include "graph.hpp"
#include "monomial.hpp"
#include "linear_combination.hpp"
#include "enumeration.hpp"
#include "hopf.hpp"
#include "dual.hpp"
#include "hom.hpp"
#include "workspace.hpp"
#include "text.hpp"
#include "json_io.hpp"
#include "word_model.hpp"
#include "verifier.hpp"
