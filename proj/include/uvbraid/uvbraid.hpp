#pragma once

#include "uvbraid/exactnum.hpp"
#include "uvbraid/linalg.hpp"
#include "uvbraid/presentations.hpp"
#include "uvbraid/representations.hpp"
#include "uvbraid/analysis.hpp"
#include "uvbraid/cli.hpp"
