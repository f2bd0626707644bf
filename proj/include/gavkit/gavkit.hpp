#pragma once

#include "gavkit/errors.hpp"
#include "gavkit/exactla/linsolve.hpp"
#include "gavkit/exactla/matrix.hpp"
#include "gavkit/exactla/normal_form.hpp"
#include "gavkit/exactla/rational.hpp"
#include "gavkit/polyhedra/cell.hpp"
#include "gavkit/polyhedra/cone.hpp"
#include "gavkit/polyhedra/fan.hpp"
#include "gavkit/core/arrangement.hpp"
#include "gavkit/core/fano.hpp"
#include "gavkit/tropical/trop.hpp"
#include "gavkit/acomplex/distance.hpp"
#include "gavkit/acomplex/complex.hpp"
#include "gavkit/classify/settings.hpp"
#include "gavkit/classify/enumerate.hpp"
#include "gavkit/classify/verify.hpp"
#include "gavkit/classify/parallel.hpp"
#include "gavkit/classify/box.hpp"
#include "gavkit/classify/pipeline.hpp"
#include "gavkit/io/json.hpp"
