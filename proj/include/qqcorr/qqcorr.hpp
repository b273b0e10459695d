#pragma once

#include "errors.hpp"
#include "spin_algebra.hpp"
#include "model.hpp"
#include "gibbs.hpp"
#include "measures.hpp"
#include "chsh.hpp"
#include "sweep.hpp"
#include "io.hpp"
