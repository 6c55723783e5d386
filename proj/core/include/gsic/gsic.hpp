#pragma once

#include "gsic/criteria.hpp"
#include "gsic/errors.hpp"
#include "gsic/gellmann.hpp"
#include "gsic/io.hpp"
#include "gsic/linalg.hpp"
#include "gsic/povm.hpp"
#include "gsic/states.hpp"
