#include <stdio.h>
#include <string.h>
#include "inertial.h"

int main(void) {
    InertialGraph *g = NULL;
    if (inertial_graph_from_graph6("IheA@GUAo", &g) != INERTIAL_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", inertial_last_error());
        return 1;
    }
    InertialInertia in;
    int64_t num = 0, den = 0;
    size_t chi = 0;
    if (inertial_inertia(g, &in) != INERTIAL_STATUS_OK) return 2;
    if (inertial_inertial_bound(g, &num, &den) != INERTIAL_STATUS_OK) return 3;
    if (inertial_chromatic_number(g, 0, &chi) != INERTIAL_STATUS_OK) return 4;
    printf("%zu %zu %zu %lld/%lld %zu\n", in.n_plus, in.n_zero, in.n_minus, (long long)num, (long long)den, chi);

    InertialGraph *bad = NULL;
    if (inertial_graph_from_graph6("C", &bad) != INERTIAL_STATUS_PARSE) return 5;
    if (strlen(inertial_last_error()) == 0) return 6;
    inertial_graph_free(g);
    return 0;
}
