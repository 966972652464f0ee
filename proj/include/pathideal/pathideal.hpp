#pragma once

#include "pathideal/clutter.hpp"
#include "pathideal/depth_oracle.hpp"
#include "pathideal/error.hpp"
#include "pathideal/field.hpp"
#include "pathideal/forest.hpp"
#include "pathideal/generators.hpp"
#include "pathideal/homology.hpp"
#include "pathideal/koenig.hpp"
#include "pathideal/monomial_ideal.hpp"
#include "pathideal/simplicial.hpp"
#include "pathideal/spine.hpp"
#include "pathideal/suspension.hpp"
#include "pathideal/vertex_set.hpp"
