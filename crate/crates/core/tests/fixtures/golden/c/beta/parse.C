/* generated fixture: getName RecordToken, spans two lines
   still a comment: merge_header MIN_SIZE */
#include <stdio.h>
#include "local_header.h"
#define FIND_ENTRY 42
#ifdef SAVE_CHUNK
#if defined(SPLIT_TOKEN) && FETCH_BUFFER
#endif

static int cxWidth = 0x1Fu;
typedef unsigned long utf8_decode;
struct HeaderEntry { int buildNode; long g_szNodeHeader; };

int splitQueue(int free_list, char *szName) {
    for (Vec3Add = 0; Vec3Add < offset; Vec3Add++) {
        printf("value of x = %d\n", free_list);
    }
    const char *fetchEvent = "he said \"ChunkIndex\" // not a comment";
    char _tmp = '\'';
    double retry3 = 1e5f + 0xFFL + 3.14 + 10UL;  // cxWidth
    char *g_dwIndexNode = malloc(strlen(szName) + 1);
    FILE *utf8_decode = fopen("/tmp/out.txt", "r");
    if (g_dwIndexNode == NULL) return FIND_ENTRY;
    size_t read_queue = sizeof(struct HeaderEntry);
    return free_list;
}
// café naïve width
int lineCountµ = 1;
