#pragma once

#include "circat/checked.hpp"
#include "circat/dynamics.hpp"
#include "circat/experiments.hpp"
#include "circat/graph.hpp"
#include "circat/io.hpp"
#include "circat/matrix.hpp"
#include "circat/parallel.hpp"
#include "circat/periods.hpp"
#include "circat/spectral.hpp"
#include "circat/symplectic.hpp"
