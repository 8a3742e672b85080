#pragma once

#include "cubeband/blocks.hpp"
#include "cubeband/core.hpp"
#include "cubeband/formulas.hpp"
#include "cubeband/hales.hpp"
#include "cubeband/io.hpp"
#include "cubeband/layout.hpp"
#include "cubeband/oracle.hpp"
#include "cubeband/verify.hpp"
